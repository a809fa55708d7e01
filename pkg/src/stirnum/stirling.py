"""Stirling numbers of both kinds and the coefficient families built on them.

The working path for both kinds is the triangular recurrence, memoized in a
shared append-only table.  The explicit alternating sum (second kind) and
the bordered lower-Hessenberg determinant (first kind) are kept as
independent routes so each can cross-check the other.

Conventions: S(n, k) is the second kind (set partitions of n labelled
elements into k blocks); s(n, k) is the signed first kind, with
sum_k s(n, k) x**k equal to the falling factorial x(x-1)...(x-n+1).
Both satisfy S(0, 0) = s(0, 0) = 1 and vanish outside 0 <= k <= n.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import List

from .errors import ConsistencyError, DomainError
from .rationals import binomial, factorial

__all__ = [
    "StirlingTable",
    "stirling2",
    "stirling1",
    "stirling2_explicit",
    "lambda_coeff",
    "mu_coeff",
    "m_determinant",
    "a_coeff",
    "b_coeff",
    "verify_first_kind_determinant_relation",
]


class StirlingTable:
    """Rows of a Stirling triangle, grown on demand and never mutated after.

    kind "second": S(n, k) = k*S(n-1, k) + S(n-1, k-1)
    kind "first":  s(n, k) = s(n-1, k-1) - (n-1)*s(n-1, k)

    Growth happens under a lock; completed rows are append-only, so reads
    of already-built entries are safe from any thread.
    """

    def __init__(self, kind: str):
        if kind not in ("second", "first"):
            raise ValueError(f"kind must be 'second' or 'first', got {kind!r}")
        self.kind = kind
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise DomainError(f"Stirling numbers need n >= 0, got n={n}")
        if k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][k]

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                prev = self._rows[m - 1]
                row = [0] * (m + 1)
                if self.kind == "second":
                    for k in range(1, m):
                        row[k] = k * prev[k] + prev[k - 1]
                else:
                    for k in range(1, m):
                        row[k] = prev[k - 1] - (m - 1) * prev[k]
                row[m] = 1
                self._rows.append(row)


_SECOND = StirlingTable("second")
_FIRST = StirlingTable("first")


def stirling2(n: int, k: int) -> int:
    """S(n, k), second kind, by the memoized recurrence."""
    return _SECOND.value(n, k)


def stirling1(n: int, k: int) -> int:
    """s(n, k), signed first kind, by the memoized recurrence."""
    return _FIRST.value(n, k)


def stirling2_explicit(n: int, k: int) -> int:
    """S(n, k) from the alternating binomial sum, for 1 <= k <= n.

    (1/k!) * sum_{l=1..k} (-1)**(k-l) C(k, l) l**n.  The sum is always
    divisible by k!; a remainder would mean a broken implementation.
    """
    if not 1 <= k <= n:
        raise DomainError(f"explicit sum needs 1 <= k <= n, got n={n}, k={k}")
    total = sum((-1) ** (k - l) * binomial(k, l) * l**n for l in range(1, k + 1))
    quotient, remainder = divmod(total, factorial(k))
    if remainder:
        raise ConsistencyError(
            f"alternating sum for S({n},{k}) not divisible by {k}!"
        )
    return quotient


def _check_coeff_domain(k: int, m: int, m_max: int) -> None:
    if k < 1:
        raise DomainError(f"coefficient families need k >= 1, got k={k}")
    if not 1 <= m <= m_max:
        raise DomainError(f"m must satisfy 1 <= m <= {m_max}, got m={m}")


def lambda_coeff(k: int, m: int) -> int:
    """(-1)**k (m-1)! S(k+1, m) for 1 <= m <= k+1."""
    _check_coeff_domain(k, m, k + 1)
    return (-1) ** k * factorial(m - 1) * stirling2(k + 1, m)


def mu_coeff(k: int, m: int) -> int:
    """(-1)**(m-1) (m-1)! S(k+1, m) for 1 <= m <= k+1."""
    _check_coeff_domain(k, m, k + 1)
    return (-1) ** (m - 1) * factorial(m - 1) * stirling2(k + 1, m)


def _determinant(matrix: List[List[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination, pivoting on the first
    nonzero entry of each column (row swaps flip the sign)."""
    size = len(matrix)
    rows = [list(row) for row in matrix]
    det = Fraction(1)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        inv = 1 / pivot
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def m_determinant(j: int, k: int, i: int) -> Fraction:
    """Determinant of the j x j bordered matrix M_j(k, i).

    Row r (1-based) has first column C(k, i+r-1) / (i+r-2)! and, for
    column c >= 2, the entry S(i+c-1, i+r-1).
    """
    if j < 1 or k < 1 or i < 1:
        raise DomainError(f"m_determinant needs j, k, i >= 1, got ({j}, {k}, {i})")
    matrix = []
    for r in range(1, j + 1):
        row = [Fraction(binomial(k, i + r - 1), factorial(i + r - 2))]
        for c in range(2, j + 1):
            row.append(Fraction(stirling2(i + c - 1, i + r - 1)))
        matrix.append(row)
    return _determinant(matrix)


def a_coeff(k: int, m: int) -> Fraction:
    """(-1)**(m*m+1) M_{k-m+1}(k, m) for 1 <= m <= k."""
    _check_coeff_domain(k, m, k)
    return (-1) ** (m * m + 1) * m_determinant(k - m + 1, k, m)


def b_coeff(k: int, m: int) -> Fraction:
    """(-1)**(k-m) a_coeff(k, m) for 1 <= m <= k."""
    _check_coeff_domain(k, m, k)
    return (-1) ** (k - m) * a_coeff(k, m)


def verify_first_kind_determinant_relation(n: int, k: int) -> bool:
    """Check s(n, k) == (-1)**(n + k*k) (n-1)! M_{n-k+1}(n, k) exactly."""
    if not 1 <= k <= n:
        raise DomainError(f"relation needs 1 <= k <= n, got n={n}, k={k}")
    lhs = Fraction(stirling1(n, k))
    rhs = (-1) ** (n + k * k) * factorial(n - 1) * m_determinant(n - k + 1, n, k)
    return lhs == rhs
