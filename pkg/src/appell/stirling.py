"""Forward differences of monomials and Stirling numbers of both kinds."""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .numeric import Polynomial, RationalLike, as_rational

_lock = threading.Lock()
# rows[n][k]; grown on demand and only ever appended to under the lock
_first_rows: list[list[int]] = [[1]]
_second_rows: list[list[int]] = [[1]]


def check_index_range(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")


def _grow(rows: list[list[int]], n: int, first_kind: bool) -> None:
    with _lock:
        while len(rows) <= n:
            prev = rows[-1]
            m = len(prev)  # the new row index
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                left = prev[k - 1]
                right = prev[k] if k < m else 0
                if first_kind:
                    row[k] = left - (m - 1) * right
                else:
                    row[k] = left + k * right
            rows.append(row)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    check_index_range(n, k)
    if n >= len(_first_rows):
        _grow(_first_rows, n, True)
    return _first_rows[n][k]


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    check_index_range(n, k)
    if n >= len(_second_rows):
        _grow(_second_rows, n, False)
    return _second_rows[n][k]


def stirling_table(kind: str, n_max: int) -> list[list[int]]:
    fn = {"first": stirling_first, "second": stirling_second}[kind]
    return [[fn(n, k) for k in range(n + 1)] for n in range(n_max + 1)]


def forward_difference_power(n: int, k: int, x: RationalLike) -> Fraction:
    """k-th forward difference of x**n evaluated at x."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    x = as_rational(x)
    total = Fraction(0)
    for j in range(k + 1):
        term = math.comb(k, j) * (x + j) ** n
        total += term if (k - j) % 2 == 0 else -term
    return total


def difference_power_polynomial(n: int, k: int) -> Polynomial:
    """Delta^k I_n as a polynomial in x."""
    return Polynomial.monomial(n).forward_difference(k)


def generalized_stirling(n: int, k: int, x: RationalLike) -> Fraction:
    """Delta^k I_n(x) / k!, defined only for k <= n."""
    check_index_range(n, k)
    return forward_difference_power(n, k, x) / math.factorial(k)
