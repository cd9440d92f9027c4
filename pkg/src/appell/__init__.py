"""Exact Appell-sequence algebra built on forward difference transformations."""
from .appell import (
    AppellSeq,
    appell_convolve,
    appell_inverse,
    associated_sequence,
    evaluate,
    expectation_transform,
    factorial_moments,
    forward_difference_transform,
    from_associated,
    identity_sequence,
    polynomial_of,
)
from .moments import MomentSequence, moments_of_iid_sum, real_power_sequence
from .numeric import Polynomial, binom_general, falling_factorial, harmonic, multinomial
from .seqgroup import (
    EgfSequence,
    binomial_convolve,
    group_inverse,
    identity_element,
    inverse_stirling_transform,
    stirling_transform,
)
from .series import TruncatedSeries
from .stirling import stirling_first, stirling_second

__version__ = "0.1.0"
