"""Bridge between a factored polynomial f and its interpolation problem.

Group the roots of f (deg f = n >= 4) by multiplicity:

    alpha_1..alpha_{n1}   simple,
    beta_1..beta_{n2}     double,
    gamma_1..gamma_{N3}   multiplicity k_s >= 3,

and set r = n - 2 - (n2 + 2*N3), mu = r + 1 - n1.  Every member p of the
kernel { p : deg p <= n-2, f divides f''p - f'p' } is divisible by the fixed
polynomial f_beta * f_gamma^2; stripping that factor and reading off the
conditions at the simple roots identifies the kernel with

    Z(delta, alpha; n1, r),      delta_i = d(alpha_i),

where d is the logarithmic-derivative combination implemented by ``d_at``.
``structural_kernel`` computes dimension and basis through that identification
(or directly, when there are no simple roots).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import (DegreeTooSmallError, NoSimpleRootsError,
                     NotDivisibleError, PoleError)
from .fields import ExactScalar
from .oracle import wf_contains, wf_form
from .poly import FactoredInput, Poly
from .zspace import ZProblem, z_report


@dataclass(frozen=True)
class RootGrouping:
    simple: tuple[ExactScalar, ...]
    double: tuple[ExactScalar, ...]
    higher: tuple[tuple[ExactScalar, int], ...]
    n: int

    @property
    def n1(self) -> int:
        return len(self.simple)

    @property
    def n2(self) -> int:
        return len(self.double)

    @property
    def N3(self) -> int:
        return len(self.higher)

    @property
    def r(self) -> int:
        return self.n - 2 - (self.n2 + 2 * self.N3)

    @property
    def mu(self) -> int:
        return self.r + 1 - self.n1


def group_roots(fi: FactoredInput) -> RootGrouping:
    if fi.degree < 4:
        raise DegreeTooSmallError(f"degree {fi.degree} < 4")
    simple = tuple(root for root, mult in fi.roots if mult == 1)
    double = tuple(root for root, mult in fi.roots if mult == 2)
    higher = tuple((root, mult) for root, mult in fi.roots if mult >= 3)
    g = RootGrouping(simple=simple, double=double, higher=higher, n=fi.degree)
    # Two expressions for r that must always coincide.
    alt = g.n1 + (g.n2 - 2) + sum(mult - 2 for _, mult in higher)
    assert g.r == alt, f"inconsistent root bookkeeping: {g.r} != {alt}"
    return g


def simple_part(fi: FactoredInput) -> Poly:
    """Monic product of (x - alpha) over the simple roots."""
    g = group_roots(fi)
    return Poly.from_roots(fi.field, g.simple)


def multiple_part(fi: FactoredInput) -> Poly:
    """The fixed divisor f_beta * f_gamma^2 shared by every kernel member."""
    g = group_roots(fi)
    factors = list(g.double) + [c for c, _ in g.higher for _ in range(2)]
    return Poly.from_roots(fi.field, factors)


def d_at(fi: FactoredInput, x0: ExactScalar) -> ExactScalar:
    """d(x0) for a simple root x0, computed two independent ways.

    Root-sum form:      sum_{alpha_j != x0} 2/(x0-alpha_j)
                        + sum_beta 3/(x0-beta) + sum_gamma 2(k_s-1)/(x0-gamma).
    Quotient form:      f_a''/f_a' + 3 f_b'/f_b + 2 ft'/ft - 2 f_c'/f_c
    evaluated at x0, where f_a, f_b, f_c are the monic simple/double/higher
    root products and ft carries each higher root with its full multiplicity.
    Both are computed and must agree.
    """
    g = group_roots(fi)
    if x0 not in g.simple:
        if any(x0 == b for b in g.double) or any(x0 == c for c, _ in g.higher):
            raise PoleError(f"{x0} is a multiple root; d has a pole there")
        raise ValueError(f"{x0} is not a simple root")
    field = fi.field
    two = field.scalar(2)
    three = field.scalar(3)

    via_sums = field.zero()
    for a in g.simple:
        if a != x0:
            via_sums = via_sums + two / (x0 - a)
    for b in g.double:
        via_sums = via_sums + three / (x0 - b)
    for c, mult in g.higher:
        via_sums = via_sums + field.scalar(2 * (mult - 1)) / (x0 - c)

    f_a = Poly.from_roots(field, g.simple)
    f_b = Poly.from_roots(field, g.double)
    f_c = Poly.from_roots(field, [c for c, _ in g.higher])
    ft = Poly.from_roots(field, [c for c, mult in g.higher for _ in range(mult)])
    via_quotients = f_a.derivative().derivative()(x0) / f_a.derivative()(x0)
    if g.double:
        via_quotients = via_quotients + three * f_b.derivative()(x0) / f_b(x0)
    if g.higher:
        via_quotients = (via_quotients
                         + two * ft.derivative()(x0) / ft(x0)
                         - two * f_c.derivative()(x0) / f_c(x0))
    assert via_sums == via_quotients, "the two forms of d disagree"
    return via_sums


def delta_vector(fi: FactoredInput) -> tuple[ExactScalar, ...]:
    """(d(alpha_1), ..., d(alpha_n1)) in the order the simple roots appear."""
    g = group_roots(fi)
    return tuple(d_at(fi, a) for a in g.simple)


def strip_multiple_part(fi: FactoredInput, p: Poly) -> Poly:
    """Divide a kernel member by f_beta * f_gamma^2 (exact, by the divisibility lemma)."""
    m = multiple_part(fi)
    try:
        return p.exact_div(m)
    except NotDivisibleError:
        raise NotDivisibleError(
            "polynomial is not divisible by the fixed multiple-root factor; "
            "it cannot be a kernel member") from None


def attach_multiple_part(fi: FactoredInput, q: Poly) -> Poly:
    """Multiply by f_beta * f_gamma^2 and verify the result lies in the kernel."""
    p = q * multiple_part(fi)
    if not wf_contains(fi.expand(), p):
        raise ValueError("attaching the multiple-root factor did not produce a kernel member; "
                         "the cofactor must satisfy the simple-root conditions")
    return p


def to_z_problem(fi: FactoredInput) -> ZProblem:
    """Z(delta, alpha; n1, r) — defined only when f has simple roots."""
    g = group_roots(fi)
    if g.n1 == 0:
        raise NoSimpleRootsError("no simple roots: the kernel is described directly, "
                                 "not by an interpolation problem")
    return ZProblem(eta=delta_vector(fi), omega=g.simple, k=g.r)


def multiplicity_reduction_check(fi: FactoredInput, p: Poly) -> bool:
    """Check the per-root divisibility equivalences behind the bridge.

    For R = f''p - f'p' and deg p <= n-2:
      at each double root beta:    (x-beta)^2 | R  <=>  (x-beta) | p,
      at each higher root gamma:   (x-gamma)^k | R  <=>  (x-gamma)^2 | p.
    Returns True iff every equivalence holds (it must, for every valid p).
    """
    g = group_roots(fi)
    if p.degree > fi.degree - 2:
        raise ValueError("degree of p exceeds n - 2")
    field = fi.field
    f = fi.expand()
    big_r = wf_form(f, p)
    ok = True
    for b in g.double:
        lhs = Poly.from_roots(field, [b, b]).divides(big_r)
        rhs = Poly.from_roots(field, [b]).divides(p)
        ok = ok and (lhs == rhs)
    for c, mult in g.higher:
        lhs = Poly.from_roots(field, [c] * mult).divides(big_r)
        rhs = Poly.from_roots(field, [c, c]).divides(p)
        ok = ok and (lhs == rhs)
    return ok


def structural_kernel(fi: FactoredInput) -> tuple[int, tuple[Poly, ...]]:
    """Kernel dimension and canonical basis via the root structure.

    With no simple roots the kernel is exactly f_beta*f_gamma^2 * P_r, so the
    monomial multiples form a basis.  Otherwise solve Z(delta, alpha; n1, r)
    and attach the fixed factor to each solution.  Every reported basis
    element is verified against the defining divisibility.
    """
    g = group_roots(fi)
    field = fi.field
    n = fi.degree
    m = multiple_part(fi)
    if g.n1 == 0:
        members = [m * Poly.x(field) ** j for j in range(g.r + 1)]
        f = fi.expand()
        for p in members:
            if not wf_contains(f, p):
                raise AssertionError(f"structural basis element {p} fails the divisibility")
    else:
        rep = z_report(to_z_problem(fi))
        members = [attach_multiple_part(fi, q) for q in rep.basis]
    vectors = [p.padded(n - 1) for p in members]
    canonical = linalg.canonical_rows(vectors, n - 1, field)
    basis = tuple(Poly(field, v) for v in canonical)
    assert len(basis) == len(members), "independent members collapsed under reduction"
    return len(basis), basis
