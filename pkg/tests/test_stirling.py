import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from appell.numeric import Polynomial, binom_general
from appell.stirling import (
    difference_power_polynomial,
    forward_difference_power,
    generalized_stirling,
    stirling_first,
    stirling_second,
    stirling_table,
)

from conftest import small_rationals


def set_partition_counts(n):
    """Count set partitions of {0..n-1} by number of blocks via restricted growth strings."""
    counts = [0] * (n + 1)

    def walk(i, blocks):
        if i == n:
            counts[blocks] += 1
            return
        for b in range(blocks + 1):
            walk(i + 1, blocks + (b == blocks))

    walk(0, 0)
    return counts


def falling_factorial_poly(n):
    p = Polynomial([1])
    for j in range(n):
        p = p * Polynomial([-j, 1])
    return p


@pytest.mark.parametrize("n", range(9))
def test_second_kind_counts_set_partitions(n):
    assert [stirling_second(n, k) for k in range(n + 1)] == set_partition_counts(n)


@pytest.mark.parametrize("n", range(15))
def test_first_kind_expands_falling_factorial(n):
    assert [stirling_first(n, k) for k in range(n + 1)] == falling_factorial_poly(n).padded(n + 1)


@pytest.mark.parametrize(
    "fn, n, k, expected",
    [
        (stirling_second, 5, 5, 1),
        (stirling_second, 3, 2, 3),
        (stirling_second, 4, 2, 7),
        (stirling_first, 5, 5, 1),
        (stirling_first, 3, 2, -3),
        (stirling_first, 4, 1, -6),
    ],
)
def test_examples(fn, n, k, expected):
    assert fn(n, k) == expected


@pytest.mark.parametrize("fn", [stirling_first, stirling_second, lambda n, k: generalized_stirling(n, k, 0)])
def test_k_above_n_rejected(fn):
    with pytest.raises(ValueError):
        fn(2, 3)


def test_orthogonality():
    for n in range(15):
        for m in range(15):
            total = sum(stirling_first(n, k) * stirling_second(k, m) for k in range(m, n + 1))
            assert total == (n == m)


def test_powers_into_falling_factorials():
    # x^n = sum_k S(n,k) (x)_k
    for n in range(12):
        rhs = sum((falling_factorial_poly(k) * stirling_second(n, k) for k in range(n + 1)), Polynomial())
        assert rhs == Polynomial.monomial(n)


def test_table_rows():
    assert stirling_table("second", 3)[3] == [0, 1, 3, 1]
    assert stirling_table("first", 3)[3] == [0, 2, -3, 1]
    assert stirling_table("second", 0) == [[1]]


@pytest.mark.parametrize(
    "n, k, x, expected",
    [(2, 0, Fraction(3, 7), Fraction(9, 49)), (2, 2, Fraction(-5, 3), 2), (3, 4, 11, 0)],
)
def test_forward_difference_power(n, k, x, expected):
    assert forward_difference_power(n, k, x) == expected


@given(st.integers(0, 8), st.integers(0, 8), small_rationals)
def test_difference_matches_polynomial_route(n, k, x):
    assert forward_difference_power(n, k, x) == difference_power_polynomial(n, k)(x)


def test_generalized_stirling():
    for n in range(10):
        for k in range(n + 1):
            assert generalized_stirling(n, k, 0) == stirling_second(n, k)
    assert generalized_stirling(3, 2, 1) == 6  # (27 - 2*8 + 1) / 2
    assert generalized_stirling(4, 0, Fraction(1, 3)) == Fraction(1, 81)


@settings(max_examples=50)
@given(small_rationals, small_rationals, st.integers(0, 10))
def test_shifted_power_expansion(x, y, n):
    # (x+y)^n = sum_k C(y,k) Delta^k I_n(x)
    rhs = sum(
        (binom_general(y, k) * forward_difference_power(n, k, x) for k in range(n + 1)),
        Fraction(0),
    )
    assert rhs == (x + y) ** n
