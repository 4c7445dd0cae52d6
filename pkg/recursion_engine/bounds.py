"""
Factorial Lower Bounds

Outside [-1, 0] the sequence grows at least factorially:

- x > 0:   a_n >= (n-1)! x^n, strict from n = 4 on
- x < -1:  |a_n| > (n-1)! |1+x|^n for every n

For x > 0 the (n-1)! canonical arrays each contribute x^n. For x < -1
every binomial-format term x^r (1+x)^(n-r) has the sign (-1)^n and
magnitude above |1+x|^n, and there are (n-1)! primitive arrays.
"""

import math
from fractions import Fraction
from typing import List

from exact_core import parse_rational
from exact_core.rationals import RationalLike
from recursion_engine.sequence import ParameterError, a_sequence


def factorial_bound_violations(x: RationalLike, n_max: int) -> List[int]:
    """
    Indices n <= n_max where the factorial lower bound fails.

    Args:
        x: Rational with x > 0 or x < -1
        n_max: Last index to check

    Returns:
        Sorted list of offending n (empty when the bound holds throughout)
    """
    value = parse_rational(x)
    if -1 <= value <= 0:
        raise ParameterError(f"factorial bounds need x > 0 or x < -1, got {value}")

    failures = []
    for n, a_n in enumerate(a_sequence(value, n_max), start=1):
        if value > 0:
            bound = math.factorial(n - 1) * value**n
            ok = a_n > bound if n >= 4 else a_n >= bound
        else:
            bound = math.factorial(n - 1) * abs(1 + value) ** n
            ok = abs(a_n) > bound
        if not ok:
            failures.append(n)
    return failures


def factorial_ratio(x: RationalLike, n: int) -> Fraction:
    """a_n / ((n-1)! x^n): how far a_n sits above the canonical-array term."""
    value = parse_rational(x)
    a_n = a_sequence(value, n)[-1]
    return a_n / (math.factorial(n - 1) * value**n)
