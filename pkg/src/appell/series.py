"""Truncated formal power series over the rationals.

These are used as an independent generating-function oracle: a sequence
identity is checked by building both sides as series and comparing
coefficients. A series of order N carries the coefficients of z^0..z^N;
binary operations return the smaller order so nothing is claimed beyond
what was actually computed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .numeric import RationalLike, as_rational, format_rational
from .seqgroup import EgfSequence

DEFAULT_ORDER = 32


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1])

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = as_rational(c)
        return TruncatedSeries(a * c for a in self.coeffs)

    def __add__(self, other):
        return ts_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return ts_add(self, _coerce(other, self.order).scale(-1))

    def __rsub__(self, other):
        return ts_add(_coerce(other, self.order), self.scale(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return ts_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / as_rational(other))
        return ts_div(self, other)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(format_rational(c) for c in self.coeffs)}])"


def _coerce(value, order: int) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries([value], order=order)


def constant(c: RationalLike, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([c], order=order)


def variable(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series z."""
    return TruncatedSeries([0, 1], order=order)


def exponential(x: RationalLike = 1, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """e^{xz}."""
    x = as_rational(x)
    return TruncatedSeries([x**n / math.factorial(n) for n in range(order + 1)])


def exp_minus_one(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """e^z - 1."""
    return TruncatedSeries(
        [0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)]
    )


def log_one_plus(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """log(1 + z)."""
    return TruncatedSeries(
        [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]
    )


def ts_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    return TruncatedSeries(f[i] + g[i] for i in range(n + 1))


def ts_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        a = f[i]
        if a:
            for j in range(n + 1 - i):
                out[i + j] += a * g[j]
    return TruncatedSeries(out)


def ts_div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    if g[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = min(f.order, g.order)
    inv = 1 / g[0]
    q: list[Fraction] = []
    for i in range(n + 1):
        acc = f[i]
        for j in range(1, i + 1):
            acc -= g[j] * q[i - j]
        q.append(acc * inv)
    return TruncatedSeries(q)


def ts_divide_by_z(f: TruncatedSeries) -> TruncatedSeries:
    """f(z)/z for f with zero constant term; the order drops by one."""
    if f[0] != 0:
        raise ValueError("constant term must vanish before dividing by z")
    if f.order == 0:
        raise ValueError("nothing left after dividing an order-0 series by z")
    return TruncatedSeries(f.coeffs[1:])


def ts_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(z)), Horner style."""
    if g[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = constant(f[n], n)
    for i in range(n - 1, -1, -1):
        acc = ts_mul(acc, g)
        acc = TruncatedSeries((acc[0] + f[i],) + acc.coeffs[1:])
    return acc


def ts_exp(f: TruncatedSeries) -> TruncatedSeries:
    if f[0] != 0:
        raise ValueError("exp needs a zero constant term")
    # g' = f' g  =>  n g_n = sum_k k f_k g_{n-k}
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * f[k] * g[n - k]
        g.append(acc / n)
    return TruncatedSeries(g)


def ts_log(g: TruncatedSeries) -> TruncatedSeries:
    if g[0] != 1:
        raise ValueError("log needs constant term 1")
    # f' g = g'  =>  n f_n = n g_n - sum_{k<n} k f_k g_{n-k}
    f = [Fraction(0)]
    for n in range(1, g.order + 1):
        acc = n * g[n]
        for k in range(1, n):
            acc -= k * f[k] * g[n - k]
        f.append(acc / n)
    return TruncatedSeries(f)


def ts_pow(f: TruncatedSeries, t: RationalLike) -> TruncatedSeries:
    """f**t = exp(t log f) for f with constant term 1."""
    if f[0] != 1:
        raise ValueError("power needs constant term 1")
    return ts_exp(ts_log(f).scale(as_rational(t)))


def sequence_to_egf(u: EgfSequence) -> TruncatedSeries:
    return TruncatedSeries(t / math.factorial(n) for n, t in enumerate(u.terms))


def egf_to_sequence(f: TruncatedSeries) -> EgfSequence:
    if f[0] == 0:
        raise ValueError("zero constant term: not an element of the group")
    return EgfSequence(c * math.factorial(n) for n, c in enumerate(f.coeffs))
