"""
Binrec Combinatorics

Signatures, patterns and arrays; split/merge and the hypercube
decomposition of the array graph; descent-count DP and lattice-path
oracles for the recursion engine.
"""

from combinatorics.arrays import (
    ArrayObj,
    EnumerationCapError,
    InvalidOperationError,
    Pattern,
    array_for,
    canonical_array,
    descent_count,
    enumerate_arrays,
    enumerate_patterns,
    iter_nondecreasing_patterns,
    merge,
    primitive_array,
    split,
)
from combinatorics.counting import arrays_by_weight, primitive_count_dp, primitive_counts
from combinatorics.hypercubes import (
    DecompositionSummary,
    HypercubeComponent,
    check_component,
    component_graph,
    decomposition_summary,
    hypercube_decomposition,
    hypercube_facts_check,
    pattern_weight_polynomial,
)
from combinatorics.lattice_paths import (
    monotone_path_count,
    nondecreasing_pattern_path_bijection,
    path_to_pattern,
    pattern_to_path,
    reflection_check,
)
from combinatorics.records import VerificationRecord
from combinatorics.signatures import Signature, count_arrays, enumerate_signatures

__all__ = [
    # Signatures
    "Signature",
    "enumerate_signatures",
    "count_arrays",
    # Patterns and arrays
    "Pattern",
    "ArrayObj",
    "EnumerationCapError",
    "InvalidOperationError",
    "enumerate_patterns",
    "iter_nondecreasing_patterns",
    "enumerate_arrays",
    "descent_count",
    "array_for",
    "canonical_array",
    "primitive_array",
    "split",
    "merge",
    # Hypercubes
    "HypercubeComponent",
    "DecompositionSummary",
    "hypercube_decomposition",
    "decomposition_summary",
    "component_graph",
    "check_component",
    "hypercube_facts_check",
    "pattern_weight_polynomial",
    # Counting
    "primitive_counts",
    "primitive_count_dp",
    "arrays_by_weight",
    # Lattice paths
    "monotone_path_count",
    "reflection_check",
    "nondecreasing_pattern_path_bijection",
    "pattern_to_path",
    "path_to_pattern",
    # Records
    "VerificationRecord",
]
