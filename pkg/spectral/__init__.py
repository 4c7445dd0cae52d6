"""
Binrec Spectral

Step-function embedding of S_n, the operators A_n and T, the eigenstructure
of T, projection angles onto the dominant eigenspace, and the growth-rate
fit linking |a_n| / (n-1)! to the dominant eigenvalue modulus.
"""

from spectral.angles import (
    AlignmentRecord,
    AngleRecord,
    AngleTrace,
    NormRatioRecord,
    RegimeReport,
    RegimeViolation,
    angle_trace,
    first_alignment,
    norm_ratio_trace,
    projection_alignment,
    projection_angle,
    tan_regime_check,
)
from spectral.eigen import (
    Basis,
    DomainError,
    Eigenpair,
    basis_inner_products,
    dominant_moduli,
    eigen_residual,
    eigenpairs,
    eigenvalue,
    exact_x,
    exp_check,
    weight_base,
    weighted_inner,
    weighted_norm,
)
from spectral.functions import PiecewiseLinear, StepFunction, embed, embed_scaled
from spectral.growth import DegenerateFitError, GrowthFit, growth_rate, log_ratios
from spectral.operators import (
    GapReport,
    apply_A_n,
    apply_T,
    hilbert_schmidt_gap,
    operator_gap,
    operator_norm_estimate,
    staircase_measure,
)

__all__ = [
    # Functions
    "StepFunction",
    "PiecewiseLinear",
    "embed",
    "embed_scaled",
    # Operators
    "apply_A_n",
    "apply_T",
    "staircase_measure",
    "hilbert_schmidt_gap",
    "operator_gap",
    "operator_norm_estimate",
    "GapReport",
    # Eigenstructure
    "DomainError",
    "Basis",
    "Eigenpair",
    "eigenvalue",
    "eigenpairs",
    "dominant_moduli",
    "eigen_residual",
    "exp_check",
    "exact_x",
    "weight_base",
    "basis_inner_products",
    "weighted_inner",
    "weighted_norm",
    # Angles
    "AngleRecord",
    "AngleTrace",
    "projection_angle",
    "angle_trace",
    "RegimeReport",
    "RegimeViolation",
    "tan_regime_check",
    "NormRatioRecord",
    "norm_ratio_trace",
    "AlignmentRecord",
    "projection_alignment",
    "first_alignment",
    # Growth
    "DegenerateFitError",
    "GrowthFit",
    "growth_rate",
    "log_ratios",
]
