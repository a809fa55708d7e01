"""Exception types shared across the package."""

__all__ = [
    "DomainError",
    "PoleError",
    "RationalParseError",
    "PrecisionExhaustedError",
    "ZeroSeriesError",
    "ConsistencyError",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """A parameter sits exactly on a pole of the requested family."""


class RationalParseError(ValueError):
    """Text does not match the rational literal format -?[0-9]+(/[0-9]+)?."""


class PrecisionExhaustedError(ArithmeticError):
    """A truncated series does not carry enough coefficients for the request."""


class ZeroSeriesError(ZeroDivisionError):
    """Reciprocal requested for a series with no nonzero coefficient."""


class ConsistencyError(RuntimeError):
    """Two independent computation paths disagreed; this signals a bug."""
