"""
Kernel dimensions for small inputs, by three independent routes
===============================================================

W(f) is the space of polynomials p with deg p <= deg f - 2 such that f
divides f''p - f'p'.  This walkthrough computes its dimension and canonical
basis for a handful of small factored inputs, three ways:

  * brute force  — solve the divisibility condition as a linear system;
  * reduction    — strip the fixed multiple-root factor and solve the induced
                   node-interpolation problem;
  * closed form  — the dimension formula for the input's multiplicity class.

`classify` runs all applicable routes and raises if they ever disagree.
"""

from wfdim import Field, classify
from wfdim.corpus import table_rows
from wfdim.poly import FactoredInput

RATIONALS = Field.rationals()


def factored(roots_with_mults):
    roots = tuple((RATIONALS.scalar(root), mult) for root, mult in roots_with_mults)
    return FactoredInput(field=RATIONALS, roots=roots, leading=RATIONALS.one())


# A pure fifth power: no simple roots, so the kernel is the multiple-root
# factor times every cofactor under the degree cap.
report = classify(factored([(0, 5)]))
print(f"f = x^5            dim {report.dimension}  case {report.case_tag}")
print("  basis:", ", ".join(str(p) for p in report.basis))

# One quadruple root and one simple root: the reduction leaves a single
# interpolation node, pinning the cofactor up to scale.
report = classify(factored([(0, 4), (1, 1)]))
print(f"f = x^4(x-1)       dim {report.dimension}  case {report.case_tag}")
print("  basis:", ", ".join(str(p) for p in report.basis))

# Two double roots: the kernel is spanned by the squared quadratic's radical.
report = classify(factored([(1, 2), (-1, 2)]))
print(f"f = (x^2-1)^2      dim {report.dimension}  case {report.case_tag}")
print("  basis:", ", ".join(str(p) for p in report.basis))

# A squarefree input: no quadratic square divides f, so the kernel is zero.
report = classify(factored([(0, 1), (1, 1), (2, 1), (3, 1)]))
print(f"f squarefree       dim {report.dimension}  case {report.case_tag}")

# The reference corpus: thirteen witnesses covering every multiplicity class
# of degrees four to six.  The frozen dim column equals mu = r + 1 - n1
# throughout, and classification reproduces it live.
print()
print("degree  n2  N3  r  n1  mu  dim  witness")
for row in table_rows():
    live = classify(row.witness).dimension
    assert live == row.dim
    print(f"{row.degree:>6}  {row.n2:>2}  {row.N3:>2}  {row.r}  {row.n1:>2}"
          f"  {row.mu:>2}  {live:>3}  {row.label}")
