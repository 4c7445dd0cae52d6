"""
Binrec Pattern Dynamics

The S_n recursion (contributions to a_n grouped by the last pattern entry),
recovery of a_n from it, and the shape analysis of S_n for x in (-1, 0).
"""

from pattern_dynamics.sequence import (
    SSequence,
    finite_difference_check,
    initial_sequence,
    iter_s_sequences,
    s_sequence,
    s_step,
)
from pattern_dynamics.shape import (
    Locus,
    ShapeReport,
    ShapeScan,
    ShapeViolation,
    find_extremes,
    find_sign_changes,
    locus_phase,
    shape_report,
    shape_scan,
    sign_change_phase,
)

__all__ = [
    # Sequences
    "SSequence",
    "initial_sequence",
    "s_step",
    "s_sequence",
    "iter_s_sequences",
    "finite_difference_check",
    # Shape
    "Locus",
    "ShapeReport",
    "ShapeScan",
    "ShapeViolation",
    "find_sign_changes",
    "find_extremes",
    "shape_report",
    "shape_scan",
    "locus_phase",
    "sign_change_phase",
]
