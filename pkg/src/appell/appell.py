"""Appell sequences, their convolution group and the forward difference transform.

An Appell sequence is stored only through its values at zero,
``A_0(0), ..., A_N(0)``; polynomials are built on demand from

    A_n(x) = sum_k C(n, k) A_k(0) x^(n-k).

The forward difference transformation with weights ``u`` maps ``A`` to

    (L_u A)_n(x) = sum_k (u_k / k!) Delta^k A_n(x),

and every Appell sequence is ``L_a I`` for a unique *associated sequence*
``a``, related to ``A(0)`` by the Stirling transform pair.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .moments import MomentSequence
from .numeric import Polynomial, RationalLike, as_rational
from .seqgroup import (
    EgfSequence,
    binomial_convolve,
    group_inverse,
    identity_element,
    inverse_stirling_transform,
    stirling_transform,
)
from .stirling import forward_difference_power


class AppellSeq:
    __slots__ = ("values_at_zero",)

    def __init__(self, values_at_zero: EgfSequence | Sequence[RationalLike]):
        if not isinstance(values_at_zero, EgfSequence):
            values_at_zero = EgfSequence(values_at_zero)
        self.values_at_zero = values_at_zero

    @property
    def order(self) -> int:
        return self.values_at_zero.order

    def __eq__(self, other):
        if not isinstance(other, AppellSeq):
            return NotImplemented
        return self.values_at_zero == other.values_at_zero

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, AppellSeq):
            return NotImplemented
        return appell_convolve(self, other)

    def __call__(self, n: int, x: RationalLike) -> Fraction:
        return evaluate(self, n, x)

    def truncate(self, order: int) -> "AppellSeq":
        return AppellSeq(self.values_at_zero.truncate(order))

    def __repr__(self):
        return f"AppellSeq({self.values_at_zero!r})"


def identity_sequence(order: int) -> AppellSeq:
    """I(x) = (x^n)."""
    return AppellSeq(identity_element(order))


def _check_degree(A: AppellSeq, n: int) -> None:
    if n < 0 or n > A.order:
        raise ValueError(f"degree {n} outside 0..{A.order}")


def polynomial_of(A: AppellSeq, n: int) -> Polynomial:
    _check_degree(A, n)
    a = A.values_at_zero
    return Polynomial(math.comb(n, j) * a[n - j] for j in range(n + 1))


def evaluate(A: AppellSeq, n: int, x: RationalLike) -> Fraction:
    _check_degree(A, n)
    x = as_rational(x)
    a = A.values_at_zero
    acc = Fraction(0)
    for j in range(n, -1, -1):
        acc = acc * x + math.comb(n, j) * a[n - j]
    return acc


def appell_convolve(A: AppellSeq, C: AppellSeq) -> AppellSeq:
    return AppellSeq(binomial_convolve(A.values_at_zero, C.values_at_zero))


def appell_inverse(A: AppellSeq) -> AppellSeq:
    return AppellSeq(group_inverse(A.values_at_zero))


def transformed_polynomial(u: EgfSequence, A: AppellSeq, n: int) -> Polynomial:
    """(L_u A)_n as a polynomial, applying Delta^k to A_n directly."""
    _check_degree(A, n)
    if u.order < n:
        raise ValueError(f"weights of order {u.order} cannot reach degree {n}")
    p = polynomial_of(A, n)
    out = Polynomial()
    for k in range(n + 1):
        if u[k]:
            out = out + p * (u[k] / math.factorial(k))
        p = p.forward_difference()
    return out


def forward_difference_transform(
    u: EgfSequence, A: AppellSeq, method: str = "multiplier"
) -> AppellSeq:
    """L_u A, truncated to the smaller of the two orders.

    ``method="direct"`` differences each polynomial A_n; ``"multiplier"``
    uses L_u A = A x L_u I, where L_u I has values at zero given by the
    Stirling transform of ``u``. Both must agree exactly.
    """
    if u[0] == 0:
        raise ValueError("u_0 must be nonzero")
    order = min(u.order, A.order)
    if method == "direct":
        return AppellSeq(
            transformed_polynomial(u, A, n).coefficient(0) for n in range(order + 1)
        )
    if method == "multiplier":
        multiplier = stirling_transform(u.truncate(order))
        return AppellSeq(binomial_convolve(A.values_at_zero, multiplier))
    raise ValueError(f"unknown method {method!r}")


def associated_sequence(A: AppellSeq) -> EgfSequence:
    """The unique a with A = L_a I: a_n = sum_k s(n,k) A_k(0)."""
    return inverse_stirling_transform(A.values_at_zero)


def from_associated(a: EgfSequence) -> AppellSeq:
    """L_a I, with values at zero A_n(0) = sum_k S(n,k) a_k."""
    if a[0] == 0:
        raise ValueError("a_0 must be nonzero")
    return AppellSeq(stirling_transform(a))


def associated_value(a: EgfSequence, n: int, x: RationalLike) -> Fraction:
    """A_n(x) = sum_k (a_k/k!) Delta^k I_n(x) for the sequence associated to a."""
    if n > a.order:
        raise ValueError(f"degree {n} exceeds order {a.order}")
    return difference_sum([a[k] / math.factorial(k) for k in range(n + 1)], n, x)


def difference_sum(weights: Sequence[RationalLike], n: int, x: RationalLike) -> Fraction:
    """sum_{k<=n} weights[k] * Delta^k I_n(x)."""
    x = as_rational(x)
    acc = Fraction(0)
    for k in range(n + 1):
        w = weights[k]
        if w:
            acc += w * forward_difference_power(n, k, x)
    return acc


def expectation_polynomial(m: MomentSequence, A: AppellSeq, n: int) -> Polynomial:
    """(R_Y A)_n(x) = sum_k C(n,k) A_k(0) E(x+Y)^(n-k), from the moments of Y."""
    _check_degree(A, n)
    if m.order < n:
        raise ValueError(f"moments of order {m.order} cannot reach degree {n}")
    a = A.values_at_zero
    out = Polynomial()
    for k in range(n + 1):
        j = n - k
        shifted = Polynomial(math.comb(j, i) * m[j - i] for i in range(j + 1))
        out = out + shifted * (math.comb(n, k) * a[k])
    return out


def expectation_transform(m: MomentSequence, A: AppellSeq) -> AppellSeq:
    """R_Y A(x) = E A(x + Y); equals A x R_Y I, and R_Y I has values m."""
    order = min(m.order, A.order)
    return AppellSeq(
        expectation_polynomial(m, A, n).coefficient(0) for n in range(order + 1)
    )


def factorial_moments(m: MomentSequence) -> EgfSequence:
    """y_n = E (Y)_n, the sequence associated to R_Y I."""
    return inverse_stirling_transform(m.as_sequence())
