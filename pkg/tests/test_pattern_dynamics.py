"""Tests for the S_n sequences and their shape analysis."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pattern_dynamics import (
    Locus,
    find_extremes,
    find_sign_changes,
    finite_difference_check,
    initial_sequence,
    iter_s_sequences,
    locus_phase,
    s_sequence,
    s_step,
    shape_report,
    shape_scan,
    sign_change_phase,
)
from recursion_engine import ParameterError, a_sequence

# numerators of S_n(0..n-1) at x = -1/2, over 2^n
HALF_NUMERATORS = {
    4: (-2, 0, 2, 2),
    5: (4, 4, 0, -4, -4),
    6: (-4, -12, -12, -4, 4, 4),
    7: (-20, 4, 28, 36, 28, 20, 20),
    8: (136, 128, 72, 0, -56, -96, -136, -136),
    9: (-224, -480, -624, -624, -512, -320, -48, 224, 224),
    10: (-2160, -1200, 48, 1296, 2320, 2960, 3056, 2608, 2160, 2160),
}

# numerators at x = -1/10, over 10^n
TENTH_NUMERATORS = {
    5: (-36, 44, 24, 4, 4),
    6: (684, 244, 4, -36, -76, -76),
    7: (540, -1900, -1940, -1580, -820, -60, -60),
}


# =============================================================================
# SEQUENCES
# =============================================================================

def test_initial_sequence(half):
    s = initial_sequence(half)
    assert s.n == 2
    assert s.values == [Fraction(1, 4)]
    assert s.aux == Fraction(-1, 4)


def test_first_step(half):
    s3 = s_step(initial_sequence(half))
    assert s3.values == [Fraction(-1, 8), Fraction(-1, 8)]
    assert s3.aux == Fraction(1, 8)


@pytest.mark.parametrize("n", sorted(HALF_NUMERATORS))
def test_hand_values_at_minus_half(half, n):
    s = s_sequence(half, n)
    expected = [Fraction(v, 2**n) for v in HALF_NUMERATORS[n]]
    assert [s.value(r) for r in range(n)] == expected


@pytest.mark.parametrize("n", sorted(TENTH_NUMERATORS))
def test_hand_values_at_minus_tenth(n):
    s = s_sequence("-1/10", n)
    expected = [Fraction(v, 10**n) for v in TENTH_NUMERATORS[n]]
    assert [s.value(r) for r in range(n)] == expected


@pytest.mark.parametrize("x", ["-1/10", "-1/2", "-9/10", "1", "-2", "3/7"])
def test_sums_recover_sequence(x):
    a = a_sequence(x, 120)
    for s in iter_s_sequences(x, 120):
        assert s.total() == a[s.n - 1]
        assert s.aux == s.y * a[s.n - 2]


@pytest.mark.parametrize("x", ["-1/10", "-1/2", "-9/10", "1", "-2"])
def test_endpoint_identity(x):
    # x S_n(0) = y S_n(n-1)
    for s in iter_s_sequences(x, 100):
        if s.n >= 3:
            assert s.x * s.aux == s.y * s.value(s.n - 1)


@settings(max_examples=40, deadline=None)
@given(
    st.fractions(min_value=-4, max_value=4, max_denominator=30).filter(bool),
    st.integers(min_value=3, max_value=60),
)
def test_finite_difference_relation(x, n):
    s = s_sequence(x, n)
    assert s.previous is not None
    assert finite_difference_check(s.previous, s)


def test_finite_difference_needs_consecutive_indices(half):
    with pytest.raises(ValueError):
        finite_difference_check(s_sequence(half, 4), s_sequence(half, 6))


def test_sequences_start_at_two():
    with pytest.raises(ParameterError):
        next(iter_s_sequences("-1/2", 1))
    with pytest.raises(ParameterError):
        initial_sequence(0)


# =============================================================================
# EVENT DETECTION
# =============================================================================

def test_sign_change_spans_zero_plateau():
    assert find_sign_changes([-3, 0, 0, 2]) == [Locus(0, 3, "up")]
    assert find_sign_changes([5, 1, -1, -1, 2]) == [Locus(1, 2, "down"), Locus(3, 4, "up")]
    assert find_sign_changes([0, 0, 1, 2]) == []


def test_extremes_allow_plateau_tops():
    assert find_extremes([1, 3, 3, 2]) == [Locus(0, 3, "max")]
    assert find_extremes([4, -1, 2, 2, 5]) == [Locus(0, 2, "min")]
    assert find_extremes([1, 2, 3]) == []


def test_shape_of_s6(half):
    report = shape_report(s_sequence(half, 6))
    assert report.sign_changes == [Locus(3, 4, "up")]
    assert report.extremes == [Locus(0, 3, "min")]
    assert report.inflections == []
    assert report.boundary_inflection
    assert not report.boundary_extreme
    assert report.zero_count == 0
    assert report.one_of_each()


def test_shape_of_s7(half):
    report = shape_report(s_sequence(half, 7))
    assert report.sign_changes == [Locus(0, 1, "up")]
    assert report.extremes == [Locus(2, 4, "max")]
    assert report.boundary_inflection
    assert report.one_of_each()


def test_shape_of_s8_has_boundary_extreme(half):
    report = shape_report(s_sequence(half, 8))
    assert report.sign_changes == [Locus(2, 4, "down")]
    assert report.extremes == []
    assert report.boundary_extreme
    assert report.inflections == [Locus(1, 4, "max")]
    assert report.zero_count == 1
    assert report.one_of_each()


def test_extreme_on_auxiliary_term_leaves_slopes_free(half):
    s = s_sequence(half, 11)
    assert s.previous.scaled[:3] == (-2160, -1200, 48)
    report = shape_report(s)
    assert report.extreme_locus == Locus(0, 2, "max")
    assert report.inflection_locus.a == 4
    assert report.one_of_each()
    scan = shape_scan(half, 11)
    assert scan.ok, [v.to_dict() for v in scan.violations]


def test_shape_of_s5(half):
    report = shape_report(s_sequence(half, 5))
    assert report.sign_changes == [Locus(1, 3, "down")]
    assert report.extremes == []
    assert report.boundary_extreme


def test_shape_needs_negative_unit_interval():
    with pytest.raises(ParameterError):
        shape_report(s_sequence("1/2", 8))
    with pytest.raises(ParameterError):
        shape_scan("-1", 10)


def test_shape_needs_previous_sequence(half):
    with pytest.raises(ParameterError):
        shape_report(s_sequence(half, 8).detached())


def test_scan_starts_at_six(half):
    with pytest.raises(ParameterError):
        shape_scan(half, 20, n_min=5)


def test_sign_change_phase(half):
    assert sign_change_phase(s_sequence(half, 8)) == Fraction(3, 14)
    assert sign_change_phase(s_sequence(half, 3)) is None
    assert locus_phase(1, 3) == Fraction(1, 4)


def test_report_serializes(half):
    data = shape_report(s_sequence(half, 8)).to_dict()
    assert data["x"] == "-1/2"
    assert data["sign_changes"] == [{"a": 2, "b": 4, "kind": "down"}]


@pytest.mark.slow
def test_shape_properties_hold_up_to_200(spectral_x):
    scan = shape_scan(spectral_x, 200)
    assert scan.ok, [v.to_dict() for v in scan.violations[:5]]
    assert len(scan.reports) == 195


def test_shape_properties_hold_for_small_n(spectral_x):
    scan = shape_scan(spectral_x, 40)
    assert scan.ok, [v.to_dict() for v in scan.violations[:5]]
