"""Tests for the binomial recursion, its formats and factorial bounds."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import A_AT_ONE, CATALAN, NZC
from recursion_engine import (
    ParameterError,
    a_sequence,
    basic_format,
    basic_polynomial,
    binomial_format,
    catalan,
    factorial_bound_violations,
    factorial_ratio,
    min_weight,
    nzc_sequence,
    scaled_a_sequence,
)


# =============================================================================
# SEQUENCE
# =============================================================================

def test_sequence_at_one():
    assert a_sequence(1, 7) == A_AT_ONE


def test_sequence_at_minus_one_is_signed_catalan():
    values = a_sequence("-1", 20)
    assert values == [(-1) ** n * CATALAN[n - 1] for n in range(1, 21)]


def test_sequence_at_minus_half():
    assert a_sequence("-1/2", 4) == [
        Fraction(-1, 2), Fraction(1, 4), Fraction(-1, 4), Fraction(1, 4)
    ]


def test_scaled_sequence_numerators():
    numerators, q = scaled_a_sequence("-1/2", 10)
    assert q == 2
    assert numerators[3:] == (4, -4, -20, 136, -224, -2160, 15408)


def test_sequence_values_are_lowest_terms():
    for value in a_sequence("3/7", 30):
        assert math.gcd(value.numerator, value.denominator) == 1


@pytest.mark.parametrize("bad", [0, "0", "0/5"])
def test_zero_parameter_is_rejected(bad):
    with pytest.raises(ParameterError):
        a_sequence(bad, 5)


def test_n_max_must_be_positive():
    with pytest.raises(ParameterError):
        a_sequence(1, 0)


def test_catalan_matches_reference():
    assert [catalan(n) for n in range(1, len(CATALAN) + 1)] == CATALAN


def test_catalan_rejects_zero_index():
    with pytest.raises(ParameterError):
        catalan(0)


def test_nzc_matches_reference():
    assert nzc_sequence(len(NZC)) == NZC


# =============================================================================
# FORMATS
# =============================================================================

@pytest.mark.parametrize(
    "n, expected",
    [(2, {2: 1}), (3, {3: 2}), (4, {3: 1, 4: 6}), (5, {4: 10, 5: 24}),
     (6, {4: 8, 5: 86, 6: 120})],
)
def test_basic_format(n, expected):
    assert basic_format(n).xi == expected


@pytest.mark.parametrize(
    "n, expected",
    [(2, {2: 1}), (4, {3: 1, 4: 5}), (6, {4: 8, 5: 70, 6: 42})],
)
def test_binomial_format(n, expected):
    assert binomial_format(n).prim == expected


@pytest.mark.parametrize("n", range(1, 41))
def test_format_counts(n):
    basic, binom = basic_format(n), binomial_format(n)
    assert basic.total() == a_sequence(1, n)[-1]
    assert binom.total() == math.factorial(n - 1)
    assert binom.count(n) == catalan(n)
    assert min(basic.xi) == min_weight(n)
    assert binom.polynomial() == basic_polynomial(n)


def test_basic_total_counts_arrays():
    assert basic_format(6).total() == 214
    assert basic_format(7).total() == 1652


@settings(max_examples=30, deadline=None)
@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=20).filter(bool),
    st.integers(min_value=1, max_value=25),
)
def test_formats_agree_with_recursion(x, n):
    a_n = a_sequence(x, n)[-1]
    assert basic_format(n).evaluate(x) == a_n
    assert binomial_format(n).evaluate(x) == a_n


def test_min_weight_examples():
    assert [min_weight(n) for n in (1, 2, 3, 4, 5, 8, 9, 16, 17)] == [1, 2, 3, 3, 4, 4, 5, 5, 6]


# =============================================================================
# BOUNDS
# =============================================================================

@pytest.mark.parametrize("x", [1, 2, "1/2", "-2", "-3/2"])
def test_factorial_bounds_hold(x):
    assert factorial_bound_violations(x, 30) == []


@pytest.mark.parametrize("x", ["-1/2", "-1", "0"])
def test_factorial_bounds_refuse_closed_interval(x):
    with pytest.raises(ParameterError):
        factorial_bound_violations(x, 10)


def test_factorial_ratio_above_one():
    assert factorial_ratio(1, 6) == Fraction(214, 120)
