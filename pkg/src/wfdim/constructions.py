"""Constructive interpolation machinery: partial fractions, CRT lifts, Hermite.

Three constructions, each verified exactly after building:

* ``partial_fraction_inverse`` / ``partial_fractions_q``: expand 1/Q(x) over
  the squared-simple / double / squared-higher factor basis of
  Q = f_alpha^2 * f_beta * f_gamma^2.
* ``crt_construct``: given target residues (a_i at simple roots for the
  twisted-derivative functional, values b_j at double roots, linear residues
  c_l at higher roots), produce p of degree <= 2*n1 + n2 + 2*N3 - 1 hitting
  all of them, by the explicit truncated-product recipe (no linear solve).
* ``hermite_basis``: the unique p with deg <= 2s-1, p(omega_i) = y_i and
  p'(omega_i) = eta_i * y_i, from the classical value/derivative basis
  polynomials; ``ev_kernel_dim`` is the dimension of the kernel of evaluation
  at the nodes once the degree cap allows multiples of
  Omega = prod (x - omega_i)^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import CoincidentPointsError, FieldMismatchError, HypothesisError
from .fields import ExactScalar, Field
from .bridge import group_roots
from .poly import FactoredInput, Poly
from .zspace import ZProblem


@dataclass(frozen=True)
class CongruenceTarget:
    """Target residues: scalars ``a`` (simple roots), ``b`` (double roots),
    and linear polynomials ``c`` (higher roots)."""

    a: tuple[ExactScalar, ...]
    b: tuple[ExactScalar, ...]
    c: tuple[Poly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        for q in self.c:
            if q.degree > 1:
                raise ValueError(f"higher-root residue must have degree <= 1, got {q}")


@dataclass(frozen=True)
class QDecomposition:
    """Exact partial fractions of 1/q over the factor basis of q.

    ``simple_numerators[i] / (x - simple_points[i])^2`` + ``double_coefficients[j]
    / (x - double_points[j])`` + ``higher_numerators[s] / (x - higher_points[s])^2``
    sums to 1/q; numerators have degree <= 1.
    """

    q: Poly
    simple_points: tuple[ExactScalar, ...]
    simple_numerators: tuple[Poly, ...]
    double_points: tuple[ExactScalar, ...]
    double_coefficients: tuple[ExactScalar, ...]
    higher_points: tuple[ExactScalar, ...]
    higher_numerators: tuple[Poly, ...]


def partial_fraction_inverse(
    factors: list[tuple[ExactScalar, int]], field: Field
) -> tuple[Poly, list[Poly]]:
    """Expand 1/prod (x-u)^e: return (the product q, numerators T_u, deg < e).

    1/q = sum T_u(x) / (x-u)^{e_u}, verified exactly by recombining:
    sum T_u * (q / (x-u)^{e_u}) must equal 1.
    """
    if not factors:
        raise ValueError("need at least one factor")
    points = [u for u, _ in factors]
    if len({p.sort_key() for p in points}) != len(points):
        raise CoincidentPointsError("factor points must be pairwise distinct")
    flat: list[ExactScalar] = []
    for u, e in factors:
        if e < 1:
            raise ValueError("factor exponents must be >= 1")
        flat.extend([u] * e)
    q = Poly.from_roots(field, flat)
    numerators: list[Poly] = []
    recombined = Poly.zero(field)
    for u, e in factors:
        cofactor = q.exact_div(Poly.from_roots(field, [u] * e))
        # Taylor coefficients of 1/cofactor at u: shift, then invert the series.
        shifted = cofactor.affine_substitute(field.one(), u)
        q0 = shifted.coeff(0)
        inv_q0 = q0.inverse()
        series = [inv_q0]
        for m in range(1, e):
            acc = field.zero()
            for j in range(1, m + 1):
                acc = acc + shifted.coeff(j) * series[m - j]
            series.append(-acc * inv_q0)
        x_minus_u = Poly.from_roots(field, [u])
        term = Poly.zero(field)
        power = Poly.one(field)
        for c in series:
            term = term + Poly.constant(c) * power
            power = power * x_minus_u
        numerators.append(term)
        recombined = recombined + term * cofactor
    assert recombined == Poly.one(field), "partial fractions failed to recombine to 1"
    return q, numerators


def partial_fractions_q(fi: FactoredInput) -> QDecomposition:
    """Partial fractions of 1/Q for Q = f_alpha^2 * f_beta * f_gamma^2.

    Simple roots contribute squared factors with linear numerators, double
    roots plain factors with scalar numerators, higher roots squared factors
    with linear numerators.  Requires at least one root; any degree accepted.
    """
    if not fi.roots:
        raise ValueError("need at least one root")
    simple = tuple(root for root, mult in fi.roots if mult == 1)
    double = tuple(root for root, mult in fi.roots if mult == 2)
    higher = tuple(root for root, mult in fi.roots if mult >= 3)
    factors = (
        [(u, 2) for u in simple]
        + [(u, 1) for u in double]
        + [(u, 2) for u in higher]
    )
    q, numerators = partial_fraction_inverse(factors, fi.field)
    n1, n2 = len(simple), len(double)
    double_coeffs = tuple(t.coeff(0) for t in numerators[n1 : n1 + n2])
    return QDecomposition(
        q=q,
        simple_points=simple,
        simple_numerators=tuple(numerators[:n1]),
        double_points=double,
        double_coefficients=double_coeffs,
        higher_points=higher,
        higher_numerators=tuple(numerators[n1 + n2 :]),
    )


def crt_construct(fi: FactoredInput, t: CongruenceTarget) -> Poly:
    """Build p with d_i*p(alpha_i) - p'(alpha_i) = a_i, p(beta_j) = b_j,
    p = c_l mod (x-gamma_l)^2, where d_i = f''(alpha_i)/f'(alpha_i).

    Requires r >= 2*n1 - 1, which makes the degree bound
    K = 2*n1 + n2 + 2*N3 - 1 <= n - 2.  The residues at simple roots are
    steered through the linear targets h_i = a_i*x + (2a_i/d_i - alpha_i*a_i)
    (or -a_i*x when d_i = 0); every congruence and functional value is
    verified exactly before returning.
    """
    field = fi.field
    g = group_roots(fi)
    if g.r < 2 * g.n1 - 1:
        raise HypothesisError(
            f"construction needs r >= 2*n1 - 1, got r={g.r}, n1={g.n1}"
        )
    if len(t.a) != g.n1 or len(t.b) != g.n2 or len(t.c) != g.N3:
        raise ValueError(
            f"target lengths {(len(t.a), len(t.b), len(t.c))} do not match "
            f"root grouping {(g.n1, g.n2, g.N3)}"
        )
    for s in list(t.a) + list(t.b):
        if s.field != field:
            raise FieldMismatchError("target scalars must share the input's field")

    f = fi.expand()
    fp = f.derivative()
    fpp = fp.derivative()

    dec = partial_fractions_q(fi)
    q = dec.q

    # Linear residue targets h_i at the simple roots.
    h_polys: list[Poly] = []
    d_values: list[ExactScalar] = []
    for alpha, a_i in zip(dec.simple_points, t.a):
        d_i = fpp(alpha) / fp(alpha)
        d_values.append(d_i)
        if d_i.is_zero():
            h_i = Poly(field, (field.zero(), -a_i))
        else:
            a_tilde = field.scalar(2) * a_i / d_i - alpha * a_i
            h_i = Poly(field, (a_tilde, a_i))
        h_polys.append(h_i)

    p = Poly.zero(field)
    for alpha, numerator, h_i in zip(dec.simple_points, dec.simple_numerators, h_polys):
        square = Poly.from_roots(field, [alpha, alpha])
        residue = (numerator * h_i) % square
        p = p + residue * q.exact_div(square)
    for beta, coeff, b_j in zip(dec.double_points, dec.double_coefficients, t.b):
        p = p + Poly.constant(coeff * b_j) * q.exact_div(Poly.from_roots(field, [beta]))
    for gamma, numerator, c_l in zip(dec.higher_points, dec.higher_numerators, t.c):
        square = Poly.from_roots(field, [gamma, gamma])
        residue = (numerator * c_l) % square
        p = p + residue * q.exact_div(square)

    cap = 2 * g.n1 + g.n2 + 2 * g.N3 - 1
    assert p.degree <= cap <= g.n - 2, (
        f"degree {p.degree} exceeds the bound {cap} (n={g.n})"
    )
    for alpha, h_i, d_i, a_i in zip(dec.simple_points, h_polys, d_values, t.a):
        square = Poly.from_roots(field, [alpha, alpha])
        assert ((p - h_i) % square).is_zero(), "residue at a simple root is off"
        assert d_i * p(alpha) - p.derivative()(alpha) == a_i, (
            "twisted-derivative value at a simple root is off"
        )
    for beta, b_j in zip(dec.double_points, t.b):
        assert p(beta) == b_j, "value at a double root is off"
    for gamma, c_l in zip(dec.higher_points, t.c):
        square = Poly.from_roots(field, [gamma, gamma])
        assert ((p - c_l) % square).is_zero(), "residue at a higher root is off"
    return p


@dataclass(frozen=True)
class HermiteData:
    """Value/derivative interpolation data: p(omega_i) = y_i, p'(omega_i) = eta_i*y_i."""

    eta: tuple[ExactScalar, ...]
    omega: tuple[ExactScalar, ...]
    y: tuple[ExactScalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "eta", tuple(self.eta))
        object.__setattr__(self, "omega", tuple(self.omega))
        object.__setattr__(self, "y", tuple(self.y))
        if not (len(self.eta) == len(self.omega) == len(self.y) >= 1):
            raise ValueError("eta, omega, y must have equal positive lengths")
        if len({w.sort_key() for w in self.omega}) != len(self.omega):
            raise CoincidentPointsError("interpolation nodes must be pairwise distinct")
        fields = {s.field for s in (*self.eta, *self.omega, *self.y)}
        if len(fields) != 1:
            raise FieldMismatchError("interpolation data must live in one field")

    @property
    def s(self) -> int:
        return len(self.omega)

    @property
    def field(self) -> Field:
        return self.omega[0].field


def hermite_basis(h: HermiteData) -> Poly:
    """The unique p with deg <= 2s-1, p(omega_i) = y_i, p'(omega_i) = eta_i*y_i.

    Built from the classical basis H_i = (1 - 2*l_i'(omega_i)(x - omega_i))*l_i^2
    (value carriers) and K_i = (x - omega_i)*l_i^2 (derivative carriers), where
    l_i is the Lagrange basis.  Nonsingularity of the 2s x 2s value/derivative
    system and the interpolation conditions are verified exactly.
    """
    field = h.field
    s = h.s
    p = Poly.zero(field)
    for i, (omega_i, eta_i, y_i) in enumerate(zip(h.omega, h.eta, h.y)):
        ell = Poly.one(field)
        for j, omega_j in enumerate(h.omega):
            if j == i:
                continue
            scale = (omega_i - omega_j).inverse()
            ell = ell * Poly(field, (-omega_j * scale, scale))
        ell_sq = ell * ell
        slope = ell.derivative()(omega_i)
        bend = Poly(field, (field.one() + field.scalar(2) * slope * omega_i,
                            -field.scalar(2) * slope))
        value_carrier = bend * ell_sq
        derivative_carrier = Poly.from_roots(field, [omega_i]) * ell_sq
        p = p + Poly.constant(y_i) * value_carrier
        p = p + Poly.constant(eta_i * y_i) * derivative_carrier

    rows = []
    for omega_i in h.omega:
        value_row, derivative_row = [], []
        power = field.one()
        previous = field.zero()
        for j in range(2 * s):
            value_row.append(power)
            derivative_row.append(field.scalar(j) * previous)
            previous = power
            power = power * omega_i
        rows.append(value_row)
        rows.append(derivative_row)
    assert linalg.rank(rows) == 2 * s, "value/derivative system unexpectedly singular"

    assert p.degree <= 2 * s - 1
    pp = p.derivative()
    for omega_i, eta_i, y_i in zip(h.omega, h.eta, h.y):
        assert p(omega_i) == y_i and pp(omega_i) == eta_i * y_i, (
            "interpolant misses its data"
        )
    return p


def ev_kernel_dim(z: ZProblem) -> int:
    """dim of the kernel of evaluation at the nodes on the degree-capped space.

    For k >= 2s-1 the kernel is Omega * (polynomials of degree <= k-2s) with
    Omega = prod (x - omega_i)^2, so the dimension is max(k - 2s + 1, 0).
    """
    if z.k < 2 * z.s - 1:
        raise HypothesisError(
            f"evaluation-kernel formula needs k >= 2s-1, got s={z.s}, k={z.k}"
        )
    return max(z.k - 2 * z.s + 1, 0)
