"""Truncated formal Laurent series over exact rationals.

A series value stores coefficients for the exponent window
``[offset, offset + len(coeffs))`` and represents

    sum_{e in window} coeffs[e - offset] * t**e  +  O(t**precision)

where ``precision = offset + len(coeffs)``.  Exponents below ``offset``
carry no terms at all (they are exactly zero by construction), while
coefficients at ``precision`` and above are unknown.  Every stored
coefficient is mathematically exact; truncation order is propagated
pessimistically so that guarantee survives arbitrary compositions:

    add:        min(precision_a, precision_b)
    mul:        min(precision_a + val_b, precision_b + val_a)
    derivative: precision - 1
    reciprocal: precision - 2*valuation - 1   (offset becomes -valuation)

``val`` is the valuation, the exponent of the first nonzero stored
coefficient; a window holding only zeros contributes its precision as the
best provable lower bound.  The one value exact to every order is the
designated zero series (empty coefficient tuple, infinite precision),
produced by scaling with 0 or multiplying by zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

from .errors import DomainError, PrecisionExhaustedError, ZeroSeriesError

__all__ = ["LaurentSeries", "ZERO", "exp_linear"]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class LaurentSeries:
    """Immutable window of exact coefficients plus a truncation order."""

    offset: int
    coeffs: Tuple[Fraction, ...]

    # -- construction --------------------------------------------------

    @classmethod
    def from_coeffs(cls, offset: int, values: Iterable[Scalar]) -> "LaurentSeries":
        """Series with the given coefficients starting at exponent ``offset``.

        An empty coefficient list yields the exact zero series.
        """
        coeffs = tuple(Fraction(v) for v in values)
        if not coeffs:
            return ZERO
        return cls(int(offset), coeffs)

    @classmethod
    def zero(cls) -> "LaurentSeries":
        """The exact zero series, valid to every order."""
        return ZERO

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> "LaurentSeries":
        """The constant ``value`` known through O(t**precision)."""
        if precision < 1:
            raise DomainError(f"constant needs precision >= 1, got {precision}")
        return cls.from_coeffs(0, (Fraction(value),) + (Fraction(0),) * (precision - 1))

    @classmethod
    def one(cls, precision: int) -> "LaurentSeries":
        return cls.constant(1, precision)

    @classmethod
    def monomial(cls, value: Scalar, exponent: int, precision: int) -> "LaurentSeries":
        """value * t**exponent with window [exponent, precision)."""
        if precision <= exponent:
            raise DomainError(
                f"monomial needs precision > exponent, got {precision} <= {exponent}"
            )
        return cls.from_coeffs(
            exponent, (Fraction(value),) + (Fraction(0),) * (precision - exponent - 1)
        )

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True only for the designated exact zero."""
        return not self.coeffs

    @property
    def precision(self):
        """First unknown exponent: offset + len(coeffs), or inf for zero."""
        if not self.coeffs:
            return math.inf
        return self.offset + len(self.coeffs)

    def valuation(self):
        """Exponent of the first nonzero stored coefficient, None if all zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.offset + i
        return None

    def _valuation_floor(self):
        # Tightest provable lower bound on the true valuation: the visible
        # valuation, or the precision when the whole window is zero.
        v = self.valuation()
        return self.precision if v is None else v

    def coeff(self, exponent: int) -> Fraction:
        """Exact coefficient of t**exponent.

        Below the window the coefficient is identically zero by construction
        and 0 is returned; at or above the precision it is unknown and
        PrecisionExhaustedError is raised.
        """
        if exponent >= self.precision:
            raise PrecisionExhaustedError(
                f"coefficient of t^{exponent} requested beyond O(t^{self.precision})"
            )
        if self.is_zero or exponent < self.offset:
            return Fraction(0)
        return self.coeffs[exponent - self.offset]

    def coefficients(self) -> Iterator[Tuple[int, Fraction]]:
        """Yield (exponent, coefficient) over the stored window, ascending."""
        for i, c in enumerate(self.coeffs):
            yield self.offset + i, c

    def equal_on_window(self, other: "LaurentSeries", lo: int, hi: int) -> bool:
        """Exact coefficient equality over [lo, hi).

        Both series must carry the full window: for a non-zero series that
        means lo >= offset and hi <= precision, otherwise the comparison
        would silently read unknown coefficients and
        PrecisionExhaustedError is raised instead.
        """
        for side in (self, other):
            if not side.is_zero and (lo < side.offset or hi > side.precision):
                raise PrecisionExhaustedError(
                    f"window [{lo},{hi}) not contained in stored window "
                    f"[{side.offset},{side.precision})"
                )
        return all(self.coeff(e) == other.coeff(e) for e in range(lo, hi))

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        offset = min(self.offset, other.offset)
        precision = min(self.precision, other.precision)
        out = [Fraction(0)] * (precision - offset)
        for side in (self, other):
            for i, c in enumerate(side.coeffs):
                e = side.offset + i
                if e >= precision:
                    break
                out[e - offset] += c
        return LaurentSeries(offset, tuple(out))

    def __neg__(self) -> "LaurentSeries":
        if self.is_zero:
            return self
        return LaurentSeries(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "LaurentSeries":
        """Multiply by an exact scalar; scaling by 0 gives the exact zero."""
        factor = Fraction(factor)
        if self.is_zero or not factor:
            return ZERO
        return LaurentSeries(self.offset, tuple(c * factor for c in self.coeffs))

    def shift(self, exponent: int) -> "LaurentSeries":
        """Multiply by the exact monomial t**exponent; the window moves rigidly."""
        if self.is_zero or exponent == 0:
            return self
        return LaurentSeries(self.offset + exponent, self.coeffs)

    def __mul__(self, other) -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        offset = self.offset + other.offset
        precision = min(
            self.precision + other._valuation_floor(),
            other.precision + self._valuation_floor(),
        )
        if precision <= offset:
            raise PrecisionExhaustedError(
                f"product window [{offset},{precision}) is empty"
            )
        out = [Fraction(0)] * (precision - offset)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ea = self.offset + i
            if ea + other.offset >= precision:
                break
            for j, b in enumerate(other.coeffs):
                e = ea + other.offset + j
                if e >= precision:
                    break
                if b:
                    out[e - offset] += a * b
        return LaurentSeries(offset, tuple(out))

    def __rmul__(self, other) -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "LaurentSeries":
        if exponent < 0:
            raise DomainError("negative power: take reciprocal() explicitly")
        if exponent == 0:
            if self.is_zero:
                raise DomainError("0**0 is undefined for the exact zero series")
            return LaurentSeries.one(self.precision)
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def derivative(self) -> "LaurentSeries":
        """Termwise d/dt; the window slides to [offset-1, precision-1)."""
        if self.is_zero:
            return self
        coeffs = tuple((self.offset + i) * c for i, c in enumerate(self.coeffs))
        return LaurentSeries(self.offset - 1, coeffs)

    def reciprocal(self) -> "LaurentSeries":
        """Multiplicative inverse on the window [-v, precision - 2v - 1).

        v is the valuation.  Writing self = t**v * u with u a unit power
        series, the inverse is t**-v * u**-1 computed by the long-division
        recurrence q_n = -(sum_{i=1..n} u_i q_{n-i}) / u_0.
        """
        if self.is_zero:
            raise ZeroSeriesError("reciprocal of the exact zero series")
        v = self.valuation()
        if v is None:
            raise ZeroSeriesError(
                "reciprocal of a series that is zero on its whole window"
            )
        offset = -v
        precision = self.precision - 2 * v - 1
        if precision <= offset:
            raise PrecisionExhaustedError(
                f"reciprocal window [{offset},{precision}) is empty; "
                "widen the source series"
            )
        length = precision - offset
        unit = [self.coeff(v + j) for j in range(length)]
        inv_lead = 1 / unit[0]
        out = [inv_lead]
        for n in range(1, length):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if unit[i]:
                    acc += unit[i] * out[n - i]
            out.append(-acc * inv_lead)
        return LaurentSeries(offset, tuple(out))

    # -- presentation -----------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.coefficients():
            if not c:
                continue
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.precision})"


ZERO = LaurentSeries(0, ())


def exp_linear(alpha: Scalar, order: int) -> LaurentSeries:
    """exp(alpha*t) truncated to the window [0, order)."""
    if order < 1:
        raise DomainError(f"exp_linear needs order >= 1, got {order}")
    alpha = Fraction(alpha)
    coeffs = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        term = term * alpha / (n + 1)
    return LaurentSeries.from_coeffs(0, coeffs)
