"""
Binomial Recursion Sequence

Exact evaluation of

    a_1 = x,    a_n = x * sum_{r=ceil(n/2)}^{n-1} C(r, n-r) * a_r

for a rational parameter x, plus the two reference sequences the engine is
checked against: Catalan numbers (A000108) and the Narayana-Zidek-Capell
numbers (A002083), which count n-signatures.

Indexing follows the expanded formats a_1 = x, a_2 = x^2, a_3 = 2x^3, ...,
so at x = 1 the sequence reads 1, 1, 2, 7, 34, 214, 1652.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from exact_core import binomial, parse_rational
from exact_core.rationals import RationalLike

logger = logging.getLogger("binrec.recursion_engine")


class ParameterError(ValueError):
    """Raised when a recursion parameter is outside the operation's contract."""


def _check_x(x: RationalLike) -> Fraction:
    value = parse_rational(x)
    if value == 0:
        raise ParameterError("x must be nonzero")
    return value


@lru_cache(maxsize=64)
def _scaled_sequence(p: int, q: int, n_max: int) -> Tuple[int, ...]:
    """
    Integers A_n = a_n * q**n for x = p/q.

    Every monomial of a_n has degree <= n, so A_n is an integer and
    A_n = p * sum C(r, n-r) * A_r * q**(n-1-r).
    """
    q_pow = [1]
    for _ in range(n_max):
        q_pow.append(q_pow[-1] * q)

    scaled = [0, p]
    for n in range(2, n_max + 1):
        total = 0
        for r in range((n + 1) // 2, n):
            total += binomial(r, n - r) * scaled[r] * q_pow[n - 1 - r]
        scaled.append(p * total)
    return tuple(scaled[1:])


def scaled_a_sequence(x: RationalLike, n_max: int) -> Tuple[Tuple[int, ...], int]:
    """
    The sequence as integer numerators over powers of the denominator of x.

    Returns:
        (numerators, q) where a_n = numerators[n-1] / q**n
    """
    value = _check_x(x)
    if n_max < 1:
        raise ParameterError(f"n_max must be at least 1, got {n_max}")
    return _scaled_sequence(value.numerator, value.denominator, n_max), value.denominator


def a_sequence(x: RationalLike, n_max: int) -> List[Fraction]:
    """
    Compute [a_1, ..., a_{n_max}] exactly.

    Args:
        x: Nonzero rational parameter ("p/q" text, int or Fraction)
        n_max: Number of terms (>= 1)

    Returns:
        List of Fractions; entry k-1 holds a_k

    Example:
        a_sequence("-1", 6) -> [-1, 1, -2, 5, -14, 42]
    """
    numerators, q = scaled_a_sequence(x, n_max)
    logger.debug(f"a_sequence x={x} n_max={n_max}")
    return [Fraction(a, q ** (k + 1)) for k, a in enumerate(numerators)]


def catalan(n: int) -> int:
    """
    Catalan number C_n in the listing 1, 1, 2, 5, 14, 42, 132 (C_1 = 1).

    Uses C_{n+1} = C(2n, n) / (n + 1) with exact division.
    """
    if n < 1:
        raise ParameterError(f"catalan index must be at least 1, got {n}")
    m = n - 1
    numerator = binomial(2 * m, m)
    value, remainder = divmod(numerator, m + 1)
    assert remainder == 0
    return value


def nzc_sequence(n_max: int) -> List[int]:
    """
    Narayana-Zidek-Capell numbers N_1..N_{n_max}.

    N_1 = 1 and N_n = sum_{r=ceil(n/2)}^{n-1} N_r: the recursion with the
    binomial coefficients removed, evaluated at x = 1.
    """
    if n_max < 1:
        raise ParameterError(f"n_max must be at least 1, got {n_max}")
    values = [0, 1]
    for n in range(2, n_max + 1):
        values.append(sum(values[(n + 1) // 2:n]))
    return values[1:]
