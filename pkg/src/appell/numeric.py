"""Exact scalars, combinatorial primitives and dense rational polynomials.

Every scalar in the package is a :class:`fractions.Fraction`; nothing is
ever rounded.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def as_rational(value: RationalLike | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; a minus sign is only allowed on ``p``."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value: RationalLike) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def factorial(n: int) -> int:
    return math.factorial(n)


def falling_factorial(t: RationalLike, n: int) -> Fraction:
    """t(t-1)...(t-n+1), with the empty product equal to 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = as_rational(t)
    out = Fraction(1)
    for j in range(n):
        out *= t - j
    return out


def binom_general(t: RationalLike, k: int) -> Fraction:
    """Binomial coefficient with an arbitrary rational upper argument."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    t = as_rational(t)
    if t.denominator == 1 and t >= 0:
        return Fraction(math.comb(t.numerator, k))
    return falling_factorial(t, k) / math.factorial(k)


def harmonic(k: int) -> Fraction:
    if k < 1:
        raise ValueError("harmonic numbers are defined for k >= 1")
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def compositions(n: int, m: int):
    """Yield every tuple of ``m`` nonnegative integers summing to ``n``."""
    if m < 1:
        raise ValueError("need at least one part")
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> "Polynomial":
        return cls([0] * n + [c])

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        return [self.coefficient(i) for i in range(length)]

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift(self, h: RationalLike) -> "Polynomial":
        """The polynomial x -> p(x + h)."""
        h = as_rational(h)
        out = Polynomial()
        step = Polynomial([h, 1])
        for c in reversed(self.coeffs):
            out = out * step + c
        return out

    def forward_difference(self, k: int = 1) -> "Polynomial":
        p = self
        for _ in range(k):
            if not p.coeffs:
                break
            p = p.shift(1) - p
        return p

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"
