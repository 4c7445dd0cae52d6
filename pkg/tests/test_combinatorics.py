"""Tests for signatures, arrays, hypercube components and lattice paths."""

import math
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import CATALAN, NZC
from combinatorics import (
    ArrayObj,
    EnumerationCapError,
    HypercubeComponent,
    InvalidOperationError,
    Pattern,
    Signature,
    arrays_by_weight,
    canonical_array,
    check_component,
    component_graph,
    count_arrays,
    decomposition_summary,
    descent_count,
    enumerate_arrays,
    enumerate_patterns,
    enumerate_signatures,
    hypercube_decomposition,
    hypercube_facts_check,
    iter_nondecreasing_patterns,
    merge,
    monotone_path_count,
    nondecreasing_pattern_path_bijection,
    path_to_pattern,
    pattern_to_path,
    pattern_weight_polynomial,
    primitive_array,
    primitive_count_dp,
    primitive_counts,
    reflection_check,
    split,
)
from recursion_engine import basic_format, basic_polynomial, binomial_format, catalan


@st.composite
def patterns(draw, max_n: int = 10) -> Pattern:
    n = draw(st.integers(min_value=2, max_value=max_n))
    return Pattern(tuple(draw(st.integers(min_value=1, max_value=j)) for j in range(1, n)))


# =============================================================================
# SIGNATURES
# =============================================================================

def test_signatures_of_five():
    assert [s.b for s in enumerate_signatures(5)] == [(1, 2, 3), (1, 2, 3, 4), (1, 2, 4)]


def test_signature_counts_match_nzc():
    assert [len(enumerate_signatures(n)) for n in range(1, 21)] == NZC


def test_invalid_signature_is_rejected():
    with pytest.raises(ValueError):
        Signature(5, (1, 2))
    with pytest.raises(ValueError):
        Signature(6, (1, 3, 4))


@pytest.mark.parametrize(
    "n, b, expected",
    [(6, (1, 2, 3, 4), 36), (6, (1, 2, 3, 5), 30), (5, (1, 2, 3), 6)],
)
def test_count_arrays(n, b, expected):
    assert count_arrays(Signature(n, b)) == expected


@pytest.mark.parametrize("n", range(2, 16))
def test_signature_weights_match_basic_format(n):
    assert arrays_by_weight(n) == basic_format(n).xi


# =============================================================================
# PATTERNS AND ARRAYS
# =============================================================================

def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern((1, 3))
    with pytest.raises(ValueError):
        Pattern((0,))


@pytest.mark.parametrize(
    "t, expected",
    [((1, 2, 1, 4, 2), 2), ((1, 1, 1, 1), 0), ((1, 2, 3, 4), 0), ((1, 2, 1, 3, 1), 2)],
)
def test_descent_count(t, expected):
    assert descent_count(Pattern(t)) == expected


def test_pattern_enumeration_counts():
    assert [p.t for p in enumerate_patterns(3)] == [(1, 1), (1, 2)]
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_patterns(n)) == math.factorial(n - 1)


def test_enumeration_cap_is_enforced():
    with pytest.raises(EnumerationCapError):
        next(enumerate_patterns(13, cap=12))


def test_primitive_array_has_no_merges():
    pattern = Pattern((1, 2, 1, 4, 2))
    primitive = primitive_array(pattern)
    assert primitive.starts() == (1, 2, 4)
    assert primitive.blocks() == [(1,), (2, 1), (4, 2)]
    assert primitive.merge_locations() == []
    assert primitive.split_locations() == [2, 4]


def test_canonical_array_has_no_splits():
    canonical = canonical_array(Pattern((1, 2, 1, 4, 2)))
    assert canonical.is_canonical()
    assert canonical.split_locations() == []
    assert canonical.merge_locations() == [2, 4]


def test_component_of_example_pattern():
    component = HypercubeComponent.of(Pattern((1, 2, 1, 4, 2)))
    assert component.dimension == 2
    assert len(list(component.members())) == 4
    assert check_component(component) == (True, "")


def test_invalid_operations():
    array = primitive_array(Pattern((1, 2, 1, 4, 2)))
    with pytest.raises(InvalidOperationError):
        split(array, 1)
    with pytest.raises(InvalidOperationError):
        merge(array, 3)
    with pytest.raises(InvalidOperationError):
        merge(array, 2)
    with pytest.raises(InvalidOperationError):
        ArrayObj(Pattern((1, 2)), frozenset({1}))


@settings(max_examples=100, deadline=None)
@given(patterns())
def test_split_and_merge_are_inverse(pattern):
    primitive = primitive_array(pattern)
    for j in primitive.split_locations():
        assert merge(split(primitive, j), j) == primitive
    canonical = canonical_array(pattern)
    for j in canonical.merge_locations():
        assert split(merge(canonical, j), j) == canonical


@settings(max_examples=100, deadline=None)
@given(patterns())
def test_splits_commute(pattern):
    primitive = primitive_array(pattern)
    locations = primitive.split_locations()
    for i in locations:
        for j in locations:
            if i < j:
                assert split(split(primitive, i), j) == split(split(primitive, j), i)


@settings(max_examples=100, deadline=None)
@given(patterns(), st.randoms(use_true_random=False))
def test_repeated_splits_reach_canonical(pattern, rng):
    array = primitive_array(pattern)
    expected_steps = array.cells - array.block_count
    steps = 0
    while array.split_locations():
        array = split(array, rng.choice(array.split_locations()))
        steps += 1
    assert steps == expected_steps
    assert array == canonical_array(pattern)


@settings(max_examples=100, deadline=None)
@given(patterns())
def test_primitive_weight_follows_descents(pattern):
    primitive = primitive_array(pattern)
    assert primitive.weight_exponent == pattern.n - descent_count(pattern)
    assert canonical_array(pattern).weight_exponent == pattern.n


# =============================================================================
# HYPERCUBES
# =============================================================================

def test_decomposition_of_six():
    components = hypercube_decomposition(6)
    assert len(components) == 120
    assert sum(c.size for c in components) == 214
    assert sum(1 for c in components if c.dimension == 2) == 8


@pytest.mark.parametrize("n", range(2, 9))
def test_summary_matches_formats(n):
    summary = decomposition_summary(n)
    assert summary.components == math.factorial(n - 1)
    assert summary.canonical_count == summary.components
    assert summary.total_arrays == basic_format(n).total()
    assert summary.arrays_by_weight == basic_format(n).xi
    assert summary.primitive_by_weight() == binomial_format(n).prim


@pytest.mark.slow
@pytest.mark.parametrize("n", [9, 10])
def test_summary_counts_up_to_ten(n):
    summary = decomposition_summary(n)
    assert summary.components == math.factorial(n - 1)
    assert summary.canonical_count == math.factorial(n - 1)
    assert summary.total_arrays == basic_format(n).total()


def test_arrays_enumeration_matches_total():
    assert sum(1 for _ in enumerate_arrays(6)) == 214


@pytest.mark.parametrize("n", range(2, 7))
def test_every_component_is_a_hypercube(n):
    for component in hypercube_decomposition(n):
        passed, reason = check_component(component)
        assert passed, reason


def test_component_graph_is_isomorphic_to_cube():
    component = HypercubeComponent.of(Pattern((1, 2, 1, 4, 3, 2)))
    assert component.dimension == 3
    assert nx.is_isomorphic(component_graph(component), nx.hypercube_graph(3))


@pytest.mark.parametrize("n", range(1, 9))
def test_pattern_weights_recover_polynomial(n):
    assert pattern_weight_polynomial(n) == basic_polynomial(n)


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_hypercube_facts(dim):
    record = hypercube_facts_check(dim)
    assert record.passed, record.details["failures"]


def test_edge_components_match_h1():
    edges = [c for c in hypercube_decomposition(4) if c.dimension == 1]
    assert edges
    for component in edges:
        assert check_component(component) == (True, "")
    record = hypercube_facts_check(1)
    assert record.observed == 2
    assert record.details["failures"] == []


# =============================================================================
# DESCENT COUNTS AND LATTICE PATHS
# =============================================================================

def test_primitive_counts():
    assert primitive_counts(6) == {4: 8, 5: 70, 6: 42}
    assert primitive_count_dp(6, 5) == 70
    assert primitive_count_dp(6, 6) == 42
    assert primitive_count_dp(6, 2) == 0


@pytest.mark.parametrize("n", range(1, 26))
def test_nondecreasing_patterns_are_catalan(n):
    assert primitive_count_dp(n, n) == CATALAN[n - 1]


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 11))
def test_three_way_primitive_oracle(n):
    by_descents = Counter(n - len(p.descents()) for p in enumerate_patterns(n))
    assert dict(by_descents) == primitive_counts(n) == binomial_format(n).prim


@pytest.mark.parametrize("n", range(1, 31))
def test_descent_dp_matches_binomial_format(n):
    assert primitive_counts(n) == binomial_format(n).prim


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_monotone_path_count(n, expected):
    assert monotone_path_count(n) == expected
    assert expected == catalan(n + 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(6, 13))
def test_monotone_path_count_up_to_twelve(n):
    assert monotone_path_count(n) == catalan(n + 1)


def test_path_cap_is_enforced():
    with pytest.raises(EnumerationCapError):
        monotone_path_count(9, cap=8)


@pytest.mark.parametrize("n", range(1, 9))
def test_reflection(n):
    record = reflection_check(n)
    assert record.passed, record.to_dict()


@pytest.mark.parametrize("n", range(1, 10))
def test_pattern_path_bijection(n):
    record = nondecreasing_pattern_path_bijection(n)
    assert record.passed, record.to_dict()
    assert record.observed == catalan(n)


def test_pattern_to_path_example():
    assert pattern_to_path(Pattern((1, 1, 3))) == "EENNEN"
    assert path_to_pattern("EENNEN") == Pattern((1, 1, 3))


def test_nondecreasing_generator_agrees_with_filter():
    direct = {p.t for p in iter_nondecreasing_patterns(7)}
    filtered = {p.t for p in enumerate_patterns(7) if p.is_nondecreasing()}
    assert direct == filtered
