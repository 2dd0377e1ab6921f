"""Exact scalar arithmetic over Q and quadratic extensions Q(sqrt(d)).

A scalar is a + b*sqrt(d) with rational a, b held as ``fractions.Fraction``.
The descriptor ``Field`` fixes d once for a whole computation: d = None means
the plain rationals (b is forced to zero there), otherwise d is a squarefree
integer other than 0 and 1 — possibly negative, so Gaussian rationals are
Field(-1).  Because such d is never a rational square, the norm a^2 - d*b^2
vanishes only at a = b = 0, which is what makes exact division total away
from zero.

``embed_to_approx`` maps an exact scalar into the arbitrary-precision complex
backend (``ApproxScalar``), taking sqrt(d) on the principal branch: positive
real for d > 0, positive imaginary for d < 0.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Union

import mpmath

from .errors import FieldMismatchError

RationalLike = Union[int, Fraction]

DEFAULT_PRECISION_BITS = 128
MIN_PRECISION_BITS = 64


def default_precision_bits() -> int:
    """Precision for the approximate backend, overridable via WFDIM_PRECISION_BITS."""
    raw = os.environ.get("WFDIM_PRECISION_BITS")
    if raw is None:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < MIN_PRECISION_BITS:
        raise ValueError(f"WFDIM_PRECISION_BITS must be >= {MIN_PRECISION_BITS}, got {bits}")
    return bits


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class Field:
    """Descriptor for Q (d is None) or Q(sqrt(d)) (d squarefree, not 0 or 1)."""

    __slots__ = ("d",)

    def __init__(self, d: int | None = None):
        if d is not None:
            if not isinstance(d, int):
                raise TypeError(f"d must be an int, got {type(d).__name__}")
            if d in (0, 1):
                raise ValueError("d must not be 0 or 1")
            if not _is_squarefree(d):
                raise ValueError(f"d must be squarefree, got {d}")
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def quadratic(cls, d: int) -> "Field":
        return cls(d)

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def scalar(self, a: RationalLike = 0, b: RationalLike = 0) -> "ExactScalar":
        return ExactScalar(self, Fraction(a), Fraction(b))

    def zero(self) -> "ExactScalar":
        return self.scalar(0)

    def one(self) -> "ExactScalar":
        return self.scalar(1)

    def sqrt_generator(self) -> "ExactScalar":
        """The element sqrt(d); undefined over the plain rationals."""
        if self.is_rational:
            raise ValueError("the rational field has no quadratic generator")
        return self.scalar(0, 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("Field", self.d))

    def __repr__(self) -> str:
        return "Field(Q)" if self.is_rational else f"Field(Q(sqrt({self.d})))"


class ExactScalar:
    """a + b*sqrt(d), exact; immutable and hashable."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: Field, a: Fraction, b: Fraction = Fraction(0)):
        if field.is_rational and b != 0:
            raise ValueError("rational-field scalars carry no sqrt part")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "ExactScalar":
        if isinstance(other, ExactScalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.field, Fraction(other))
        return NotImplemented

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExactScalar(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExactScalar(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.field.is_rational:
            return ExactScalar(self.field, self.a * o.a)
        d = self.field.d
        return ExactScalar(
            self.field,
            self.a * o.a + d * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (just a^2 over Q); zero only at zero."""
        if self.field.is_rational:
            return self.a * self.a
        return self.a * self.a - self.field.d * self.b * self.b

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.field, self.a, -self.b)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.norm()
        return ExactScalar(self.field, self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)  # agrees with int/Fraction hashing
        return hash((self.a, self.b, self.field.d))

    def sort_key(self):
        """Deterministic (not order-theoretic) key for stable output ordering."""
        return (self.a, self.b)

    def pivot_weight(self) -> int:
        """Size measure used to pick elimination pivots: largest numerator wins."""
        n = self.norm()
        return abs(n.numerator)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.field.d})"
        if self.b == 1:
            bs = root
        elif self.b == -1:
            bs = f"-{root}"
        else:
            bs = f"{self.b}*{root}"
        if self.a == 0:
            return bs
        sign = "-" if self.b < 0 else "+"
        mag = bs.lstrip("-")
        return f"{self.a} {sign} {mag}"

    def __repr__(self) -> str:
        return f"ExactScalar({self})"

    def is_composite_display(self) -> bool:
        """True when rendering needs parentheses inside a polynomial term."""
        return self.b != 0 and self.a != 0


class ApproxScalar:
    """Arbitrary-precision complex scalar (mpmath backend).

    Arithmetic runs at the larger operand precision; the construction rounds
    once, so each operation is correct to within a few units in the last
    place at ``precision_bits``.
    """

    __slots__ = ("re", "im", "precision_bits")

    def __init__(self, re, im=0, precision_bits: int = DEFAULT_PRECISION_BITS):
        if precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
        with mpmath.workprec(precision_bits):
            object.__setattr__(self, "re", mpmath.mpf(re))
            object.__setattr__(self, "im", mpmath.mpf(im))
        object.__setattr__(self, "precision_bits", precision_bits)

    def __setattr__(self, name, value):
        raise AttributeError("ApproxScalar is immutable")

    @classmethod
    def from_mpc(cls, value, precision_bits: int) -> "ApproxScalar":
        value = mpmath.mpmathify(value)
        return cls(mpmath.re(value), mpmath.im(value), precision_bits)

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(self.re, self.im)

    def _binary(self, other, op):
        # Both operands must be materialized inside workprec: mpc construction
        # re-rounds to the ambient precision, which defaults to 53 bits.
        if isinstance(other, ApproxScalar):
            bits = max(self.precision_bits, other.precision_bits)
            with mpmath.workprec(bits):
                return ApproxScalar.from_mpc(op(self.to_mpc(), other.to_mpc()), bits)
        if isinstance(other, (int, Fraction, float)):
            bits = self.precision_bits
            with mpmath.workprec(bits):
                return ApproxScalar.from_mpc(op(self.to_mpc(), mpmath.mpmathify(other)), bits)
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: y / x)

    def __neg__(self):
        return ApproxScalar(-self.re, -self.im, self.precision_bits)

    def magnitude(self) -> mpmath.mpf:
        with mpmath.workprec(self.precision_bits):
            return abs(self.to_mpc())

    def __repr__(self) -> str:
        return f"ApproxScalar({self.re}, {self.im}, bits={self.precision_bits})"


def embed_to_approx(x: ExactScalar, precision_bits: int | None = None) -> ApproxScalar:
    """Exact -> approximate embedding, principal branch for sqrt(d).

    A field homomorphism up to rounding: the result is within relative error
    2^(1-precision_bits) of the true complex value.
    """
    bits = default_precision_bits() if precision_bits is None else precision_bits
    if bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    # Construct with guard bits, round once at the target precision.
    with mpmath.workprec(bits + 16):
        a = mpmath.mpf(x.a.numerator) / x.a.denominator
        if x.field.is_rational or x.b == 0:
            value = mpmath.mpc(a, 0)
        else:
            b = mpmath.mpf(x.b.numerator) / x.b.denominator
            d = x.field.d
            root = mpmath.sqrt(abs(d))
            if d > 0:
                value = mpmath.mpc(a + b * root, 0)
            else:
                value = mpmath.mpc(a, b * root)
    return ApproxScalar.from_mpc(value, bits)
