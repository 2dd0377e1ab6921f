"""Deterministic test corpus: table witnesses and seeded random generators.

The thirteen ``table_rows`` reproduce the small-degree survey (degrees 4-6)
with one witness polynomial per multiplicity configuration; every random
generator takes an explicit ``random.Random`` so corpora are reproducible
from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bridge import group_roots
from .constructions import CongruenceTarget
from .fields import ExactScalar, Field
from .poly import FactoredInput, Poly
from .zspace import ZProblem

__all__ = [
    "TableRow",
    "table_rows",
    "random_fraction",
    "random_scalar",
    "random_distinct_scalars",
    "random_poly",
    "random_factored_input",
    "random_wide_input",
    "random_z_problem",
    "random_congruence_target",
]


@dataclass(frozen=True)
class TableRow:
    """One column of the small-degree survey: configuration, expected
    dimension, and a witness polynomial realizing it."""

    degree: int
    n2: int
    N3: int
    r: int
    n1: int
    mu: int
    dim: int
    witness: FactoredInput

    @property
    def label(self) -> str:
        return str(self.witness)


def table_rows() -> tuple[TableRow, ...]:
    """The thirteen (degree, n2, N3, r, n1) configurations for degrees 4-6.

    The expected ``dim`` equals ``mu`` on every row.  Each witness was chosen
    as the simplest integer-rooted polynomial with the required multiplicity
    profile; the configuration numbers are re-derived from the witness and
    asserted, so a typo here cannot survive import.
    """
    q = Field.rationals()

    def fi(*roots: tuple[int, int]) -> FactoredInput:
        return FactoredInput(q, roots)

    rows = (
        TableRow(4, 0, 1, 0, 0, 1, 1, fi((0, 4))),
        TableRow(4, 2, 0, 0, 0, 1, 1, fi((1, 2), (-1, 2))),
        TableRow(5, 0, 1, 1, 1, 1, 1, fi((0, 4), (1, 1))),
        TableRow(5, 0, 1, 1, 0, 2, 2, fi((0, 5))),
        TableRow(5, 2, 0, 1, 1, 1, 1, fi((1, 2), (-1, 2), (2, 1))),
        TableRow(5, 1, 1, 0, 0, 1, 1, fi((1, 3), (-1, 2))),
        TableRow(6, 0, 1, 2, 0, 3, 3, fi((0, 6))),
        TableRow(6, 1, 1, 1, 0, 2, 2, fi((0, 4), (1, 2))),
        TableRow(6, 0, 1, 2, 1, 2, 2, fi((0, 5), (1, 1))),
        TableRow(6, 0, 1, 2, 2, 1, 1, fi((0, 4), (1, 1), (2, 1))),
        TableRow(6, 3, 0, 1, 0, 2, 2, fi((0, 2), (1, 2), (-1, 2))),
        TableRow(6, 1, 1, 1, 1, 1, 1, fi((0, 3), (1, 2), (2, 1))),
        TableRow(6, 2, 0, 2, 2, 1, 1, fi((1, 2), (-1, 2), (2, 1), (3, 1))),
    )
    for row in rows:
        g = group_roots(row.witness)
        found = (g.n, g.n2, g.N3, g.r, g.n1, g.mu)
        wanted = (row.degree, row.n2, row.N3, row.r, row.n1, row.mu)
        assert found == wanted, f"witness {row.label} realizes {found}, not {wanted}"
        assert row.dim == row.mu, f"survey rows all have dim == mu; got {row}"
    return rows


# -- seeded random generators ---------------------------------------------------

_DENOMINATORS = (1, 1, 1, 2, 3, 4)


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    """A small random rational, biased toward integers."""
    return Fraction(rng.randint(-span, span), rng.choice(_DENOMINATORS))


def random_scalar(rng: random.Random, field: Field, span: int = 9) -> ExactScalar:
    """A random field element; over a quadratic field the irrational part is
    present about half the time."""
    a = random_fraction(rng, span)
    if field.is_rational or rng.random() < 0.5:
        return field.scalar(a)
    return field.scalar(a, random_fraction(rng, span))


def random_distinct_scalars(
    rng: random.Random, field: Field, count: int, span: int = 9
) -> tuple[ExactScalar, ...]:
    """``count`` pairwise distinct random field elements."""
    seen: set[ExactScalar] = set()
    out: list[ExactScalar] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000:
            raise ValueError(f"cannot draw {count} distinct scalars from span {span}")
        x = random_scalar(rng, field, span)
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def random_poly(
    rng: random.Random, field: Field, max_degree: int = 6, min_degree: int = 0
) -> Poly:
    """A random nonzero polynomial with small coefficients."""
    degree = rng.randint(min_degree, max_degree)
    coeffs = [random_scalar(rng, field, 5) for _ in range(degree)]
    leading = field.zero()
    while leading.is_zero():
        leading = random_scalar(rng, field, 5)
    coeffs.append(leading)
    return Poly(field, coeffs)


def _random_profile(rng: random.Random, max_degree: int) -> tuple[int, int, list[int]]:
    """Multiplicity profile (n1, n2, higher multiplicities) with 4 <= n <= max."""
    while True:
        n1 = rng.randint(0, 4)
        n2 = rng.randint(0, 3)
        higher = [rng.randint(3, 5) for _ in range(rng.randint(0, 2))]
        n = n1 + 2 * n2 + sum(higher)
        if 4 <= n <= max_degree:
            return n1, n2, higher


def random_factored_input(
    rng: random.Random,
    field: Field | None = None,
    max_degree: int = 12,
) -> FactoredInput:
    """A random factored polynomial, 4 <= degree <= max_degree, with distinct
    small roots spread across all three multiplicity classes."""
    field = field or Field.rationals()
    n1, n2, higher = _random_profile(rng, max_degree)
    roots = random_distinct_scalars(rng, field, n1 + n2 + len(higher))
    mults = [1] * n1 + [2] * n2 + higher
    leading = rng.choice((1, 1, 1, 2, -1, Fraction(3, 2)))
    return FactoredInput(field, list(zip(roots, mults)), leading)


def random_wide_input(
    rng: random.Random,
    field: Field | None = None,
    max_degree: int = 12,
) -> FactoredInput:
    """A random factored polynomial satisfying r >= 2*n1 - 1 (the regime where
    the residue-construction route is available)."""
    while True:
        fi = random_factored_input(rng, field, max_degree)
        g = group_roots(fi)
        if g.r >= 2 * g.n1 - 1:
            return fi


def random_z_problem(
    rng: random.Random,
    field: Field,
    s: int,
    k: int,
    span: int = 9,
) -> ZProblem:
    """A random derivative-interpolation problem with s distinct nodes."""
    omega = random_distinct_scalars(rng, field, s, span)
    eta = tuple(random_scalar(rng, field, span) for _ in range(s))
    return ZProblem(eta=eta, omega=omega, k=k)


def random_congruence_target(rng: random.Random, fi: FactoredInput) -> CongruenceTarget:
    """Random residue targets matching fi's root grouping: scalars at simple
    and double roots, a polynomial of degree <= 1 at each higher root."""
    g = group_roots(fi)
    field = fi.field
    return CongruenceTarget(
        a=tuple(random_scalar(rng, field) for _ in g.simple),
        b=tuple(random_scalar(rng, field) for _ in g.double),
        c=tuple(
            Poly(field, (random_scalar(rng, field), random_scalar(rng, field)))
            for _ in g.higher
        ),
    )
