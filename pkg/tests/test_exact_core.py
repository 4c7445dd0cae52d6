"""Tests for exact rationals, binomials and integer polynomials."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exact_core import (
    BigPolynomial,
    BinomialCache,
    RationalParseError,
    binomial,
    format_rational,
    log_abs,
    parse_rational,
    poly_eval,
    scaled_floats,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
polynomials = st.lists(st.integers(-1000, 1000), max_size=8).map(
    lambda c: BigPolynomial(tuple(c))
)


# =============================================================================
# RATIONALS
# =============================================================================

@pytest.mark.parametrize(
    "text, expected",
    [
        ("-1/2", Fraction(-1, 2)),
        ("3", Fraction(3)),
        (" 4/6 ", Fraction(2, 3)),
        ("0.25", Fraction(1, 4)),
        (7, Fraction(7)),
        (Fraction(-9, 10), Fraction(-9, 10)),
    ],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["abc", "1/0", "", 0.5, True])
def test_parse_rational_rejects(bad):
    with pytest.raises(RationalParseError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(1652)) == "1652"


def test_log_abs_matches_math_log():
    assert log_abs(Fraction(-1, 24)) == pytest.approx(math.log(1 / 24))
    assert log_abs(Fraction(0)) == float("-inf")


def test_log_abs_handles_values_beyond_float_range():
    huge = Fraction(10**400, 3)
    assert log_abs(huge) == pytest.approx(400 * math.log(10) - math.log(3))


def test_scaled_floats_never_overflow():
    floats, log_scale = scaled_floats([10**500, -(10**499), 0], 7)
    assert floats == [1.0, -0.1, 0.0]
    assert log_scale == pytest.approx(500 * math.log(10) - math.log(7))


def test_scaled_floats_zero_vector():
    floats, log_scale = scaled_floats([0, 0], 5)
    assert floats == [0.0, 0.0]
    assert log_scale == float("-inf")


# =============================================================================
# BINOMIALS
# =============================================================================

@pytest.mark.parametrize(
    "n, r, expected",
    [(0, 0, 1), (5, 2, 10), (6, 3, 20), (4, 5, 0), (4, -1, 0), (60, 30, math.comb(60, 30))],
)
def test_binomial(n, r, expected):
    assert binomial(n, r) == expected


def test_binomial_cache_grows_on_demand():
    cache = BinomialCache()
    assert cache.n_max == 0
    assert cache.get(10, 4) == 210
    assert cache.n_max == 10
    assert cache.row(4) == [1, 4, 6, 4, 1]


def test_binomial_cache_rejects_negative_row():
    with pytest.raises(ValueError):
        BinomialCache().get(-1, 0)


# =============================================================================
# POLYNOMIALS
# =============================================================================

def test_trailing_zeros_are_trimmed():
    assert BigPolynomial((1, 2, 0, 0)) == BigPolynomial((1, 2))
    assert BigPolynomial((0, 0)).is_zero
    assert BigPolynomial.zero().degree == -1


def test_binomial_basis():
    # x^2 (1+x)^3
    assert BigPolynomial.binomial_basis(2, 3).terms() == {2: 1, 3: 3, 4: 3, 5: 1}


def test_poly_eval_examples():
    p = BigPolynomial.from_mapping({3: 1, 4: 6})
    assert poly_eval(p, 1) == 7
    assert poly_eval(p, Fraction(-1, 2)) == Fraction(1, 4)
    assert poly_eval(BigPolynomial.zero(), Fraction(3, 7)) == 0


def test_shift_and_scale():
    p = BigPolynomial((1, 1))
    assert p.shift(2) == BigPolynomial((0, 0, 1, 1))
    assert p.scale(-3) == BigPolynomial((-3, -3))


@given(polynomials, polynomials, rationals)
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)
    assert poly_eval(p - q, x) == poly_eval(p, x) - poly_eval(q, x)
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)


@given(polynomials, polynomials)
def test_multiplication_commutes(p, q):
    assert p * q == q * p
