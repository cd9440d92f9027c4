"""Random variables represented by their exact moment sequences.

Every expectation needed here is a linear functional of the moments
``m_n = E[Y^n]``, so a finite moment prefix stands in for the variable.
Independent sums are handled through binomial convolution, since the
moment EGF of a sum of independent variables is the product of the
individual moment EGFs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numeric import RationalLike, as_rational, binom_general
from .seqgroup import EgfSequence, binomial_convolve, identity_element
from .stirling import check_index_range


# Exponential-moment conditions of the analytic theory, recorded but never
# enforced: every constructor below has a moment generating function that is
# finite near 0 (needed by the expectation transform) and satisfies
# r E|Y| e^{r|Y|} < 1 for small r (needed by real powers). "negated" inherits
# from its argument.
ANALYTIC_CONDITIONS = {
    "point-mass": {"expectation_transform": True, "real_power": True},
    "uniform01": {"expectation_transform": True, "real_power": True},
    "exponential1": {"expectation_transform": True, "real_power": True},
    "uniform-times-exponential": {"expectation_transform": True, "real_power": True},
    "finite-support": {"expectation_transform": True, "real_power": True},
}


@dataclass(frozen=True)
class MomentSequence:
    moments: tuple[Fraction, ...]
    label: str

    def __post_init__(self):
        if not self.moments or self.moments[0] != 1:
            raise ValueError("moment sequences start with m_0 = 1")

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.moments[n]

    def as_sequence(self) -> EgfSequence:
        return EgfSequence(self.moments)

    def truncate(self, order: int) -> "MomentSequence":
        return MomentSequence(self.moments[: order + 1], self.label)


def point_mass(c: RationalLike, order: int) -> MomentSequence:
    c = as_rational(c)
    return MomentSequence(tuple(c**n for n in range(order + 1)), f"point-mass({c})")


def uniform01(order: int) -> MomentSequence:
    return MomentSequence(tuple(Fraction(1, n + 1) for n in range(order + 1)), "uniform01")


def exponential1(order: int) -> MomentSequence:
    return MomentSequence(
        tuple(Fraction(math.factorial(n)) for n in range(order + 1)), "exponential1"
    )


def uniform_times_exponential(order: int) -> MomentSequence:
    """Moments of U*T with U uniform on [0,1] and T standard exponential."""
    return MomentSequence(
        tuple(Fraction(math.factorial(n), n + 1) for n in range(order + 1)),
        "uniform-times-exponential",
    )


def negated(m: MomentSequence) -> MomentSequence:
    return MomentSequence(
        tuple(v if n % 2 == 0 else -v for n, v in enumerate(m.moments)),
        f"negated({m.label})",
    )


def finite_support(
    atoms: Sequence[tuple[RationalLike, RationalLike]], order: int
) -> MomentSequence:
    """Moments of a distribution with finitely many (value, probability) atoms."""
    pairs = [(as_rational(v), as_rational(p)) for v, p in atoms]
    if any(p < 0 for _, p in pairs):
        raise ValueError("probabilities must be nonnegative")
    if sum(p for _, p in pairs) != 1:
        raise ValueError("probabilities must sum to 1")
    moments = tuple(
        sum((p * v**n for v, p in pairs), Fraction(0)) for n in range(order + 1)
    )
    return MomentSequence(moments, "finite-support")


def moments_of_iid_sum(m: MomentSequence, k: int) -> MomentSequence:
    """Moments of Y_1 + ... + Y_k for independent copies of Y."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    acc = identity_element(m.order)
    base = m.as_sequence()
    for _ in range(k):
        acc = binomial_convolve(acc, base)
    return MomentSequence(acc.terms, f"sum{k}({m.label})")


def iid_sum_table(m: MomentSequence, k_max: int) -> list[MomentSequence]:
    """[moments of W_0, ..., W_{k_max}] built incrementally."""
    out = [MomentSequence(identity_element(m.order).terms, f"sum0({m.label})")]
    base = m.as_sequence()
    for k in range(1, k_max + 1):
        acc = binomial_convolve(EgfSequence(out[-1].moments), base)
        out.append(MomentSequence(acc.terms, f"sum{k}({m.label})"))
    return out


def stirling_second_via_moments(n: int, k: int) -> Fraction:
    """S(n,k) = C(n,k) E[S_k^(n-k)], S_k a sum of k uniforms."""
    check_index_range(n, k)
    w = moments_of_iid_sum(uniform01(n - k), k)
    return math.comb(n, k) * w[n - k]


def stirling_first_via_moments(n: int, k: int) -> Fraction:
    """s(n,k) = (-1)^(n-k) C(n,k) E[(S*_k)^(n-k)], S*_k a sum of k products U*T."""
    check_index_range(n, k)
    w = moments_of_iid_sum(uniform_times_exponential(n - k), k)
    sign = -1 if (n - k) % 2 else 1
    return sign * math.comb(n, k) * w[n - k]


def real_power_sequence(m: MomentSequence, t: RationalLike) -> EgfSequence:
    """Sequence whose EGF is (E e^{zY})^t, for any rational t.

    Uses y_n(t) = sum_k C(t,k) C(n-t,n-k) E[W_k^n] with W_k the sum of k
    independent copies of Y.
    """
    t = as_rational(t)
    sums = iid_sum_table(m, m.order)
    out = []
    for n in range(m.order + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += binom_general(t, k) * binom_general(n - t, n - k) * sums[k][n]
        out.append(acc)
    return EgfSequence(out)
