import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from appell import series as ts
from appell.seqgroup import EgfSequence, binomial_convolve, identity_element
from appell.stirling import stirling_first, stirling_second

from conftest import egf_sequences, small_rationals


def S(coeffs, order=None):
    return ts.TruncatedSeries(coeffs, order=order)


def test_mul():
    assert ts.ts_mul(S([1, 1], 4), S([1, -1], 4)) == S([1, 0, -1], 4)


def test_div_z_shifted_exp():
    shifted = ts.ts_divide_by_z(ts.exp_minus_one(4))
    q = ts.ts_div(shifted, ts.constant(1, 3))
    assert q.order == 3
    assert q.coeffs == (1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24))


def test_div_by_zero_constant():
    with pytest.raises(ZeroDivisionError):
        ts.ts_div(ts.constant(1, 3), ts.variable(3))


@settings(max_examples=50)
@given(st.lists(small_rationals, min_size=1, max_size=10).filter(lambda c: c[0] != 0))
def test_reciprocal(coeffs):
    f = S(coeffs)
    assert ts.ts_mul(f, ts.ts_div(ts.constant(1, f.order), f)) == ts.constant(1, f.order)


def test_orders_take_minimum():
    assert ts.ts_add(ts.constant(1, 3), ts.constant(1, 7)).order == 3
    assert ts.ts_mul(ts.exp_minus_one(5), ts.exponential(1, 2)).order == 2


def test_compose_examples():
    f = S([3, 1, 4, 1, 5])
    assert ts.ts_compose(f, ts.constant(0, 4)) == ts.constant(3, 4)
    assert ts.ts_compose(f, ts.variable(4)) == f
    geometric = S([1] * 3)
    ordered_bell = ts.ts_compose(geometric, ts.exp_minus_one(2))
    assert ordered_bell.coeffs == (1, 1, Fraction(3, 2))


def test_compose_rejects_constant_inner():
    with pytest.raises(ValueError):
        ts.ts_compose(ts.constant(1, 3), ts.constant(1, 3))


def test_exp_and_log_examples():
    assert ts.ts_exp(ts.variable(4)) == ts.exponential(1, 4)
    assert ts.ts_exp(ts.variable(4)).coeffs[4] == Fraction(1, 24)
    assert ts.ts_log(S([1, 1], 3)).coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3))
    assert ts.ts_log(S([1, 1], 3)) == ts.log_one_plus(3)
    assert ts.ts_exp(ts.ts_log(S([1, 1], 6))) == S([1, 1], 6)


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        ts.ts_exp(ts.constant(1, 3))
    with pytest.raises(ValueError):
        ts.ts_log(ts.constant(2, 3))
    with pytest.raises(ValueError):
        ts.ts_pow(ts.constant(2, 3), Fraction(1, 2))


@settings(max_examples=40)
@given(st.lists(small_rationals, min_size=1, max_size=9))
def test_log_exp_round_trips(tail):
    f = S([0, *tail])
    assert ts.ts_log(ts.ts_exp(f)) == f
    g = S([1, *tail])
    assert ts.ts_exp(ts.ts_log(g)) == g


def test_pow_examples():
    f = S([1, 3, -2, 5], 6)
    assert ts.ts_pow(f, 0) == ts.constant(1, 6)
    assert ts.ts_pow(S([1, 1], 5), 2) == S([1, 2, 1], 5)
    quotient = ts.ts_divide_by_z(ts.exp_minus_one(3))
    assert ts.ts_pow(quotient, -1).coeffs == (1, Fraction(-1, 2), Fraction(1, 12))


@settings(max_examples=30)
@given(st.lists(small_rationals, min_size=1, max_size=7), small_rationals, small_rationals)
def test_pow_adds_exponents(tail, s, t):
    f = S([1, *tail])
    assert ts.ts_pow(f, s + t) == ts.ts_mul(ts.ts_pow(f, s), ts.ts_pow(f, t))


@settings(max_examples=30)
@given(st.lists(small_rationals, min_size=1, max_size=7), small_rationals)
def test_pow_matches_binomial_series(tail, t):
    # (1+g)^t = sum_k C(t,k) g^k for g with zero constant term
    from appell.numeric import binom_general

    g = S([0, *tail])
    acc = ts.constant(0, g.order)
    power = ts.constant(1, g.order)
    for k in range(g.order + 1):
        acc = acc + power.scale(binom_general(t, k))
        power = ts.ts_mul(power, g)
    assert ts.ts_pow(ts.constant(1, g.order) + g, t) == acc


def test_egf_bridge_examples():
    assert ts.egf_to_sequence(ts.exponential(1, 5)) == EgfSequence([1] * 6)
    bernoulli = ts.egf_to_sequence(ts.ts_pow(ts.ts_divide_by_z(ts.exp_minus_one(7)), -1))
    assert bernoulli.terms == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42))
    assert ts.sequence_to_egf(identity_element(4)) == ts.constant(1, 4)
    with pytest.raises(ValueError):
        ts.egf_to_sequence(ts.variable(3))


@given(egf_sequences())
def test_egf_round_trip(u):
    assert ts.egf_to_sequence(ts.sequence_to_egf(u)).terms == u.terms


@given(egf_sequences(), egf_sequences())
def test_convolution_is_series_product(u, v):
    lhs = ts.sequence_to_egf(binomial_convolve(u, v))
    rhs = ts.ts_mul(ts.sequence_to_egf(u), ts.sequence_to_egf(v))
    assert lhs.coeffs == rhs.coeffs


def test_stirling_generating_functions():
    order = 16
    e1 = ts.exp_minus_one(order)
    l1 = ts.log_one_plus(order)
    pe = ts.constant(1, order)
    pl = ts.constant(1, order)
    for k in range(order + 1):
        for n in range(k, order + 1):
            assert pe[n] * math.factorial(n) / math.factorial(k) == stirling_second(n, k)
            assert pl[n] * math.factorial(n) / math.factorial(k) == stirling_first(n, k)
        pe = ts.ts_mul(pe, e1)
        pl = ts.ts_mul(pl, l1)
