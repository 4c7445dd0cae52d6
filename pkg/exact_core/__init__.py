"""
Binrec Exact Core

Exact arbitrary-precision scalars and integer polynomials shared by every
pipeline. No floating point happens here except at the explicit boundary
helpers (scaled_floats, log_abs).
"""

from exact_core.binomials import BinomialCache, binomial, binomial_cache
from exact_core.polynomial import BigPolynomial, poly_eval
from exact_core.rationals import (
    BigRational,
    RationalParseError,
    format_rational,
    log_abs,
    parse_rational,
    scaled_floats,
)

__all__ = [
    # Scalars
    "BigRational",
    "RationalParseError",
    "parse_rational",
    "format_rational",
    "log_abs",
    "scaled_floats",
    # Polynomials
    "BigPolynomial",
    "poly_eval",
    # Binomials
    "BinomialCache",
    "binomial",
    "binomial_cache",
]
