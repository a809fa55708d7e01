"""Number and polynomial families computed two independent ways.

Every family here has a closed form built from Stirling numbers and an
oracle that reads the same value out of a truncated generating series.
The two routes share no code beyond the Stirling table itself, so exact
agreement between them is a meaningful check and is enforced by the test
suite rather than by collapsing one route into the other.

Families and their exponential generating functions:

    bernoulli            t / (e**t - 1)
    apostol_bernoulli    t / (lam * e**t - 1)
    euler_polynomial     2 e**(x t) / (e**t + 1)
    euler_number         2**n * E_n(1/2)
    two_param_euler      2 e**(x t) / (lam * e**(alpha t) + 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Tuple, Union

from .errors import ConsistencyError, DomainError, PoleError
from .rationals import binomial, factorial
from .series import LaurentSeries, exp_linear
from .stirling import stirling2

__all__ = [
    "Polynomial",
    "SequenceValue",
    "FAMILIES",
    "sequence_value",
    "bernoulli_oracle",
    "bernoulli_formula",
    "apostol_bernoulli_formula",
    "apostol_bernoulli_oracle",
    "euler_polynomial_formula",
    "euler_polynomial_oracle",
    "euler_number",
    "stirling_alternating_sum",
    "two_param_euler_formula",
    "two_param_euler_oracle",
    "verify_two_param_reductions",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over exact rationals; coeffs[i] multiplies x**i.

    Trailing zero coefficients are trimmed on construction, so two equal
    polynomials always compare equal structurally.  The zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, values: Iterable[Scalar]) -> "Polynomial":
        vals = [Fraction(v) for v in values]
        while vals and not vals[-1]:
            vals.pop()
        return cls(tuple(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __call__(self, point: Scalar) -> Fraction:
        return self.evaluate(point)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.from_coeffs(
            [self.coeff(i) + other.coeff(i) for i in range(size)]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial.from_coeffs(out)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial(())
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)) by Horner evaluation over polynomials."""
        result = Polynomial(())
        for c in reversed(self.coeffs):
            result = result * inner + Polynomial.from_coeffs([c])
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _geometric_stirling_sum(j: int, rho: Fraction) -> Fraction:
    """sum_{m=1..j} (-1)**(m-1) (m-1)! S(j, m) rho**m."""
    total = Fraction(0)
    power = Fraction(1)
    for m in range(1, j + 1):
        power *= rho
        total += (-1) ** (m - 1) * factorial(m - 1) * stirling2(j, m) * power
    return total


def _half_weight(j: int) -> Fraction:
    # sum_{l=1..j} (-1)**(l-1) (l-1)!/2**(l-1) S(j, l)
    return 2 * _geometric_stirling_sum(j, Fraction(1, 2))


# -- Bernoulli ------------------------------------------------------------


def bernoulli_oracle(n: int) -> Fraction:
    """B_n as n! times the t**n coefficient of t/(e**t - 1), order n + 4."""
    if n < 0:
        raise DomainError(f"Bernoulli numbers need n >= 0, got {n}")
    order = n + 4
    base = (exp_linear(1, order) - LaurentSeries.one(order)).reciprocal()
    return base.shift(1).coeff(n) * factorial(n)


def bernoulli_formula(k: int) -> Fraction:
    """B_{2k} for k >= 1 from the double Stirling-number sum.

    B_{2k} = 1 + sum_{m=1..2k-1} S(2k+1, m+1) S(2k, 2k-m) / C(2k, m)
               - (2k/(2k+1)) * sum_{m=1..2k} S(2k, m) S(2k+1, 2k-m+1) / C(2k, m-1)
    """
    if k < 1:
        raise DomainError(f"the even-index closed form needs k >= 1, got {k}")
    n = 2 * k
    first = sum(
        Fraction(stirling2(n + 1, m + 1) * stirling2(n, n - m), binomial(n, m))
        for m in range(1, n)
    )
    second = sum(
        Fraction(stirling2(n, m) * stirling2(n + 1, n - m + 1), binomial(n, m - 1))
        for m in range(1, n + 1)
    )
    return 1 + first - Fraction(n, n + 1) * second


# -- Apostol-Bernoulli ----------------------------------------------------


def apostol_bernoulli_formula(n: int, lam: Scalar) -> Fraction:
    """B_n(lam) for n >= 1 from the single Stirling-number sum.

    B_n(lam) = (-1)**(n-1) n sum_{k=1..n} (k-1)!/(lam-1)**k S(n, k).
    The n = 0 value is not covered by this form; use the oracle.
    """
    lam = Fraction(lam)
    if n < 1:
        raise DomainError(f"the closed form needs n >= 1, got {n}; use the oracle")
    if lam == 1:
        raise PoleError("lambda = 1 is a pole of the closed form")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(factorial(k - 1), 1) / (lam - 1) ** k * stirling2(n, k)
    return (-1) ** (n - 1) * n * total


def apostol_bernoulli_oracle(n: int, lam: Scalar, order: Optional[int] = None) -> Fraction:
    """B_n(lam) as n! times the t**n coefficient of t/(lam*e**t - 1)."""
    lam = Fraction(lam)
    if n < 0:
        raise DomainError(f"Apostol-Bernoulli numbers need n >= 0, got {n}")
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    if order is None:
        order = n + 8
    denom = exp_linear(1, order).scale(lam) - LaurentSeries.one(order)
    return denom.reciprocal().shift(1).coeff(n) * factorial(n)


# -- Euler polynomials and numbers ----------------------------------------


def euler_polynomial_formula(n: int) -> Polynomial:
    """E_n(x) with coefficient of x**k equal to

    (-1)**(n-k) C(n, k) sum_{l=1..n-k+1} (-1)**(l-1) (l-1)!/2**(l-1) S(n-k+1, l).
    """
    if n < 0:
        raise DomainError(f"Euler polynomials need n >= 0, got {n}")
    coeffs = [
        (-1) ** (n - k) * binomial(n, k) * _half_weight(n - k + 1)
        for k in range(n + 1)
    ]
    return Polynomial.from_coeffs(coeffs)


def euler_polynomial_oracle(n: int, x: Scalar, order: Optional[int] = None) -> Fraction:
    """E_n(x) as n! times the t**n coefficient of 2 e**(x t)/(e**t + 1)."""
    if n < 0:
        raise DomainError(f"Euler polynomials need n >= 0, got {n}")
    if order is None:
        order = n + 8
    denom = exp_linear(1, order) + LaurentSeries.one(order)
    series = (exp_linear(Fraction(x), order) * denom.reciprocal()).scale(2)
    return series.coeff(n) * factorial(n)


def _euler_even_direct(n: int) -> Fraction:
    # E_n for even n = 4**(n/2) sum_{k=0..n} w(n-k+1) (-1)**k 2**-k C(n, k)
    # with w the alternating half-power Stirling weight.
    total = Fraction(0)
    for k in range(n + 1):
        total += _half_weight(n - k + 1) * Fraction((-1) ** k, 2**k) * binomial(n, k)
    return Fraction(4) ** (n // 2) * total


def euler_number(n: int) -> Fraction:
    """E_n = 2**n E_n(1/2), always an integer-valued rational.

    For even n the independent single-sum form is evaluated as well; a
    mismatch between the two routes raises rather than returning either.
    """
    if n < 0:
        raise DomainError(f"Euler numbers need n >= 0, got {n}")
    value = Fraction(2) ** n * euler_polynomial_formula(n).evaluate(Fraction(1, 2))
    if n % 2 == 0:
        direct = _euler_even_direct(n)
        if direct != value:
            raise ConsistencyError(
                f"euler_number({n}): half-point route {value} != even-index route {direct}"
            )
    if value.denominator != 1:
        raise ConsistencyError(f"euler_number({n}) came out non-integral: {value}")
    return value


def stirling_alternating_sum(n: int) -> Fraction:
    """sum_{k=0..2n-1} w(2n-k) (-1)**k 2**-k C(2n-1, k) for n >= 1.

    w is the alternating half-power Stirling weight; the sum telescopes to
    zero because odd-index Euler numbers vanish.
    """
    if n < 1:
        raise DomainError(f"the alternating sum needs n >= 1, got {n}")
    total = Fraction(0)
    for k in range(2 * n):
        total += _half_weight(2 * n - k) * Fraction((-1) ** k, 2**k) * binomial(2 * n - 1, k)
    return total


# -- Two-parameter Euler ---------------------------------------------------


def _check_two_param(alpha: Fraction, lam: Fraction) -> None:
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    if lam == -1:
        raise PoleError("lambda = -1 is a pole of the two-parameter family")


def two_param_euler_formula(n: int, alpha: Scalar, lam: Scalar) -> Polynomial:
    """E_n(x; alpha, lam) with coefficient of x**k equal to

    2 (-alpha)**(n-k) C(n, k)
        sum_{m=1..n-k+1} (-1)**(m-1) (m-1)! S(n-k+1, m) (1/(lam+1))**m.
    """
    alpha, lam = Fraction(alpha), Fraction(lam)
    if n < 0:
        raise DomainError(f"the two-parameter family needs n >= 0, got {n}")
    _check_two_param(alpha, lam)
    rho = 1 / (lam + 1)
    coeffs = [
        2 * (-alpha) ** (n - k) * binomial(n, k) * _geometric_stirling_sum(n - k + 1, rho)
        for k in range(n + 1)
    ]
    return Polynomial.from_coeffs(coeffs)


def two_param_euler_oracle(
    n: int, x: Scalar, alpha: Scalar, lam: Scalar, order: Optional[int] = None
) -> Fraction:
    """E_n(x; alpha, lam) as n! times the t**n coefficient of
    2 e**(x t) / (lam e**(alpha t) + 1)."""
    alpha, lam = Fraction(alpha), Fraction(lam)
    if n < 0:
        raise DomainError(f"the two-parameter family needs n >= 0, got {n}")
    _check_two_param(alpha, lam)
    if order is None:
        order = n + 8
    denom = exp_linear(alpha, order).scale(lam) + LaurentSeries.one(order)
    series = (exp_linear(Fraction(x), order) * denom.reciprocal()).scale(2)
    return series.coeff(n) * factorial(n)


def verify_two_param_reductions(n: int, alpha: Scalar, lam: Scalar) -> bool:
    """Check the reduction identities of the two-parameter family at (n, alpha, lam).

    Exact polynomial identities:
        E_n(x; 1, 1) == E_n(x)
        E_n(x; alpha, lam) == alpha**n E_n(x/alpha; 1, lam)  (coefficientwise)
    Pointwise, at nonzero sample nodes x:
        E_n(x; alpha, lam) == x**n E_n(1; alpha/x, lam)
    """
    alpha, lam = Fraction(alpha), Fraction(lam)
    if n < 0:
        raise DomainError(f"the two-parameter family needs n >= 0, got {n}")
    _check_two_param(alpha, lam)
    if two_param_euler_formula(n, 1, 1) != euler_polynomial_formula(n):
        return False
    full = two_param_euler_formula(n, alpha, lam)
    unit_alpha = two_param_euler_formula(n, 1, lam)
    rescaled = Polynomial.from_coeffs(
        [unit_alpha.coeff(k) * alpha ** (n - k) for k in range(n + 1)]
    )
    if full != rescaled:
        return False
    for x in (Fraction(1), Fraction(-1, 3), Fraction(5, 2)):
        pivot = two_param_euler_formula(n, alpha / x, lam).evaluate(1)
        if full.evaluate(x) != x**n * pivot:
            return False
    return True


# -- Uniform access ---------------------------------------------------------


FAMILIES = (
    "bernoulli",
    "apostol_bernoulli",
    "euler_number",
    "euler_polynomial",
    "two_param_euler",
)

_PROVENANCES = ("formula", "oracle")


@dataclass(frozen=True)
class SequenceValue:
    """One computed family member, tagged with how it was produced.

    parameters holds (name, value) pairs in a fixed order; value is a
    rational for number families (or evaluated polynomials) and a
    Polynomial otherwise.  notes carries human-readable caveats, e.g. for
    parameter ranges outside the family's stated domain.
    """

    family: str
    index: int
    parameters: Tuple[Tuple[str, Fraction], ...]
    value: Union[Fraction, Polynomial]
    provenance: str
    notes: Tuple[str, ...] = field(default=())


def sequence_value(
    family: str,
    index: int,
    provenance: str = "formula",
    *,
    lam: Optional[Scalar] = None,
    alpha: Optional[Scalar] = None,
    x: Optional[Scalar] = None,
    order: Optional[int] = None,
) -> SequenceValue:
    """Compute one family member through the requested route.

    Polynomial families return a Polynomial from the formula route when no
    evaluation point x is given, and a rational otherwise; oracle routes
    for polynomial families always need x.
    """
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    if provenance not in _PROVENANCES:
        raise DomainError(f"provenance must be one of {_PROVENANCES}, got {provenance!r}")
    if index < 0:
        raise DomainError(f"family index must be >= 0, got {index}")

    params: list = []
    notes: list = []

    if family == "bernoulli":
        if provenance == "formula":
            if index < 2 or index % 2:
                raise DomainError(
                    "the closed form covers even indices >= 2 only; use the oracle"
                )
            value = bernoulli_formula(index // 2)
        else:
            value = bernoulli_oracle(index)

    elif family == "apostol_bernoulli":
        if lam is None:
            raise DomainError("apostol_bernoulli needs the lambda parameter")
        lam = Fraction(lam)
        params.append(("lambda", lam))
        if provenance == "formula":
            value = apostol_bernoulli_formula(index, lam)
        else:
            value = apostol_bernoulli_oracle(index, lam, order)

    elif family == "euler_number":
        if provenance == "formula":
            value = euler_number(index)
        else:
            value = Fraction(2) ** index * euler_polynomial_oracle(
                index, Fraction(1, 2), order
            )

    elif family == "euler_polynomial":
        if provenance == "formula":
            poly = euler_polynomial_formula(index)
            value = poly if x is None else poly.evaluate(Fraction(x))
        else:
            if x is None:
                raise DomainError("the oracle route needs an evaluation point x")
            value = euler_polynomial_oracle(index, Fraction(x), order)
        if x is not None:
            params.append(("x", Fraction(x)))

    else:  # two_param_euler
        if alpha is None or lam is None:
            raise DomainError("two_param_euler needs both alpha and lambda")
        alpha, lam = Fraction(alpha), Fraction(lam)
        params.append(("alpha", alpha))
        params.append(("lambda", lam))
        if provenance == "formula":
            poly = two_param_euler_formula(index, alpha, lam)
            value = poly if x is None else poly.evaluate(Fraction(x))
        else:
            if x is None:
                raise DomainError("the oracle route needs an evaluation point x")
            value = two_param_euler_oracle(index, Fraction(x), alpha, lam, order)
        if x is not None:
            params.append(("x", Fraction(x)))
        if lam <= 0:
            notes.append(
                f"lambda = {lam} lies outside the positive range the family is "
                "stated for; the value is computed formally from the same expressions"
            )

    return SequenceValue(
        family=family,
        index=index,
        parameters=tuple(params),
        value=value,
        provenance=provenance,
        notes=tuple(notes),
    )
