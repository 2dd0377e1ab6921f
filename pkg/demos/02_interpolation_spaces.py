"""
Node-interpolation spaces and their associated matrices
=======================================================

Z(eta, omega; s, k) collects the polynomials of degree <= k satisfying
p'(omega_i) = eta_i * p(omega_i) at s distinct nodes.  Its dimension is the
corank of an s x (k+1) matrix; the space is called degenerate when that
matrix loses full rank.  This script builds the matrices, shows the one
degenerate two-node configuration, and demonstrates the dimension laws.
"""

from wfdim import Field
from wfdim.zspace import (ZProblem, associated_matrix, critical_eta, drop_node,
                          min_drop_dimension, z_report)

RATIONALS = Field.rationals()
c = RATIONALS.scalar


def show(problem: ZProblem, title: str) -> None:
    report = z_report(problem)
    print(title)
    for row in associated_matrix(problem):
        print("   [", "  ".join(f"{str(entry):>5}" for entry in row), "]")
    print(f"   rank {report.rank}  dim {report.dimension}"
          f"  degenerate {report.degenerate}")
    for p in report.basis:
        print("   member:", p)
    print()


# Two nodes, cap 2.  With eta = omega = (1, -1) the two rows are negatives of
# each other: rank collapses to 1 and the space is degenerate with dim 2.
show(ZProblem(eta=(c(1), c(-1)), omega=(c(1), c(-1)), k=2),
     "eta = (1,-1), omega = (1,-1), k = 2")

# The same nodes with generic data: full rank, dim k+1-s = 1.
show(ZProblem(eta=(c(2), c(3)), omega=(c(1), c(-1)), k=2),
     "eta = (2,3), omega = (1,-1), k = 2")

# Degenerate data is not an accident here: for caps k >= 2s-2 only one eta
# vector can be degenerate, the pairwise reciprocal sum over the nodes.
omega = (c(1), c(-1))
print("critical eta for nodes (1,-1):",
      tuple(str(e) for e in critical_eta(omega)))
print()

# Minimal caps k = 2s-1 always give dim s (value/derivative interpolation),
# wider caps add one dimension per extra degree.
for k in (3, 4, 5, 6):
    problem = ZProblem(eta=(c(0), c(0)), omega=(c(0), c(1)), k=k)
    print(f"s = 2, k = {k}: dim {z_report(problem).dimension} (k+1-s = {k - 1})")
print()

# Between the bounds s <= k < 2s the dimension obeys a node-removal identity:
# dim Z = 1 + the minimum dimension over the s problems obtained by deleting
# one node (which shifts the remaining data and lowers the cap by two).
problem = ZProblem(eta=(c(1), c(2), c(3), c(4)),
                   omega=(c(0), c(1), c(2), c(3)), k=4)
dropped = [z_report(drop_node(problem, i)).dimension for i in range(problem.s)]
print("four nodes, cap 4: dropped-node dims", dropped)
print("1 + min =", min_drop_dimension(problem),
      " direct dim =", z_report(problem).dimension)
