"""Seeded 64-bit linear congruential generator for reproducible test points.

State update: ``s <- (6364136223846793005 * s + 1442695040888963407) mod 2^64``
(Knuth's MMIX constants). A draw in ``[lo, hi]`` takes the high 32 bits of
the new state modulo ``hi - lo + 1``. Rationals are ``p/q`` with ``p`` drawn
from [-20, 20] and then ``q`` from [1, 12].
"""
from __future__ import annotations

from fractions import Fraction

from .seqgroup import EgfSequence

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1

NUMERATOR_RANGE = (-20, 20)
DENOMINATOR_RANGE = (1, 12)


class LinearGenerator:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state

    def integer(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + (self.next_u64() >> 32) % (hi - lo + 1)

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            p = self.integer(*NUMERATOR_RANGE)
            q = self.integer(*DENOMINATOR_RANGE)
            if p or not nonzero:
                return Fraction(p, q)

    def sequence(self, order: int) -> EgfSequence:
        """Random group element of the given order (leading term nonzero)."""
        return EgfSequence([self.rational(nonzero=True)] + [self.rational() for _ in range(order)])
