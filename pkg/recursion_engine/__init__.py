"""
Binrec Recursion Engine

Exact evaluation of a_n for rational x, as a polynomial in x (basic format)
and in the binomial basis x^r (1+x)^(n-r), plus the reference sequences
(Catalan A000108, Narayana-Zidek-Capell A002083) it is checked against.
"""

from recursion_engine.bounds import factorial_bound_violations, factorial_ratio
from recursion_engine.formats import (
    BasicFormat,
    BinomialFormat,
    FormatConsistencyError,
    basic_format,
    basic_polynomial,
    binomial_format,
    min_weight,
)
from recursion_engine.sequence import (
    ParameterError,
    a_sequence,
    catalan,
    nzc_sequence,
    scaled_a_sequence,
)

__all__ = [
    # Sequence
    "ParameterError",
    "a_sequence",
    "scaled_a_sequence",
    "catalan",
    "nzc_sequence",
    # Formats
    "BasicFormat",
    "BinomialFormat",
    "FormatConsistencyError",
    "basic_format",
    "basic_polynomial",
    "binomial_format",
    "min_weight",
    # Bounds
    "factorial_bound_violations",
    "factorial_ratio",
]
