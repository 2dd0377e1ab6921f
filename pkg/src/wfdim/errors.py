"""Exception classes shared across the package.

Plain ``ValueError``/``ZeroDivisionError``/``IndexError`` are used where the
standard library already names the failure; the classes here cover the
domain-specific ones so callers (and the CLI exit-code mapping) can tell
them apart.
"""

from __future__ import annotations


class FieldMismatchError(ValueError):
    """Operands live over different scalar fields."""


class DegreeTooSmallError(ValueError):
    """The polynomial has degree < 4, below the theory's standing hypothesis."""


class NotDivisibleError(ArithmeticError):
    """An exact division was requested but a nonzero remainder appeared."""


class PoleError(ZeroDivisionError):
    """A rational expression was evaluated at one of its poles."""


class CoincidentPointsError(ValueError):
    """Nodes that must be pairwise distinct coincide."""


class HypothesisError(ValueError):
    """A construction was invoked outside its proven range of validity."""


class NoSimpleRootsError(ValueError):
    """The interpolation-problem reduction needs at least one simple root."""


class RouteDisagreementError(AssertionError):
    """Two independent computation routes returned different results.

    This always indicates an implementation bug, never bad input.
    """


class ParseError(ValueError):
    """Malformed input specification (CLI/JSON layer)."""
