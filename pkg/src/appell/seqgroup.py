"""The group of EGF sequences under binomial convolution.

Sequences are finite prefixes ``u_0..u_N`` of infinite sequences. Every
operation here is lower-triangular in the index, so a prefix of length N+1
determines the first N+1 terms of the result exactly; binary operations
return the shorter of the two prefixes.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import RationalLike, as_rational, format_rational
from .stirling import stirling_first, stirling_second


class EgfSequence:
    """Prefix of a sequence with nonzero leading term.

    Two sequences compare equal when they agree on their common prefix.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[RationalLike]):
        ts = tuple(as_rational(t) for t in terms)
        if not ts:
            raise ValueError("an EGF sequence needs at least one term")
        if ts[0] == 0:
            raise ValueError("leading term u_0 must be nonzero")
        self.terms: tuple[Fraction, ...] = ts

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def truncate(self, order: int) -> "EgfSequence":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return EgfSequence(self.terms[: order + 1])

    def first_mismatch(self, other: "EgfSequence") -> int | None:
        for i, (a, b) in enumerate(zip(self.terms, other.terms)):
            if a != b:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, EgfSequence):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, EgfSequence):
            return NotImplemented
        return binomial_convolve(self, other)

    def __repr__(self):
        return f"EgfSequence([{', '.join(format_rational(t) for t in self.terms)}])"


def _common_order(*seqs: EgfSequence) -> int:
    return min(s.order for s in seqs)


def binomial_convolve(u: EgfSequence, v: EgfSequence) -> EgfSequence:
    n_max = _common_order(u, v)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += math.comb(n, k) * u[k] * v[n - k]
        out.append(acc)
    return EgfSequence(out)


def convolve_all(seqs: Sequence[EgfSequence]) -> EgfSequence:
    if not seqs:
        raise ValueError("nothing to convolve")
    out = seqs[0]
    for s in seqs[1:]:
        out = binomial_convolve(out, s)
    return out


def identity_element(order: int) -> EgfSequence:
    return EgfSequence([1] + [0] * order)


def group_inverse(u: EgfSequence) -> EgfSequence:
    inv_lead = 1 / u[0]
    v = [inv_lead]
    for n in range(1, u.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += math.comb(n, k) * u[k] * v[n - k]
        v.append(-inv_lead * acc)
    return EgfSequence(v)


def stirling_transform(u: EgfSequence) -> EgfSequence:
    """v_n = sum_k S(n, k) u_k."""
    return EgfSequence(
        sum((stirling_second(n, k) * u[k] for k in range(n + 1)), Fraction(0))
        for n in range(u.order + 1)
    )


def inverse_stirling_transform(v: EgfSequence) -> EgfSequence:
    """u_n = sum_k s(n, k) v_k."""
    return EgfSequence(
        sum((stirling_first(n, k) * v[k] for k in range(n + 1)), Fraction(0))
        for n in range(v.order + 1)
    )
