"""
Polynomial Formats of a_n

Two ways of writing a_n as a polynomial in x:

- basic format     a_n = sum_r xi_r x^r
                   (xi_r counts n-arrays with r-1 blocks)
- binomial format  a_n = sum_r P(n, r) x^r (1+x)^(n-r)
                   (P(n, r) counts primitive n-arrays with r-1 blocks)

The basic format comes from running the recursion with x symbolic. The
binomial format is recovered from it by triangular back-substitution; the
combinatorics package provides the independent enumeration and DP oracles.
"""

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from exact_core import BigPolynomial, binomial, parse_rational, poly_eval
from exact_core.rationals import RationalLike
from recursion_engine.sequence import ParameterError

logger = logging.getLogger("binrec.recursion_engine")


class FormatConsistencyError(ArithmeticError):
    """A binomial-format count came out negative; the conversion is broken."""


# =============================================================================
# FORMAT RECORDS
# =============================================================================

@dataclass(frozen=True)
class BasicFormat:
    """a_n = sum_r xi[r] * x**r"""

    n: int
    xi: Dict[int, int] = field(default_factory=dict)

    def polynomial(self) -> BigPolynomial:
        return BigPolynomial.from_mapping(self.xi)

    def evaluate(self, x: RationalLike) -> Fraction:
        return Fraction(poly_eval(self.polynomial(), parse_rational(x)))

    def total(self) -> int:
        """Number of n-arrays (the value at x = 1)."""
        return sum(self.xi.values())

    def to_dict(self) -> dict:
        return {"n": self.n, "xi": {str(r): str(c) for r, c in sorted(self.xi.items())}}


@dataclass(frozen=True)
class BinomialFormat:
    """a_n = sum_r prim[r] * x**r * (1 + x)**(n - r)"""

    n: int
    prim: Dict[int, int] = field(default_factory=dict)

    def count(self, r: int) -> int:
        return self.prim.get(r, 0)

    def polynomial(self) -> BigPolynomial:
        result = BigPolynomial.zero()
        for r, count in self.prim.items():
            result = result + BigPolynomial.binomial_basis(r, self.n - r).scale(count)
        return result

    def evaluate(self, x: RationalLike) -> Fraction:
        value = parse_rational(x)
        y = 1 + value
        return sum((c * value**r * y ** (self.n - r) for r, c in self.prim.items()), Fraction(0))

    def total(self) -> int:
        """Number of primitive n-arrays, one per pattern: (n-1)!."""
        return sum(self.prim.values())

    def to_dict(self) -> dict:
        return {"n": self.n, "prim": {str(r): str(c) for r, c in sorted(self.prim.items())}}


# =============================================================================
# SYMBOLIC RECURSION
# =============================================================================

class _BasicTable:
    """a_1, a_2, ... as BigPolynomials, appended in order under a lock."""

    def __init__(self):
        self._polys: List[BigPolynomial] = [BigPolynomial.zero(), BigPolynomial.monomial(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> BigPolynomial:
        if n < len(self._polys):
            return self._polys[n]
        with self._lock:
            while len(self._polys) <= n:
                m = len(self._polys)
                total = BigPolynomial.zero()
                for r in range((m + 1) // 2, m):
                    total = total + self._polys[r].scale(binomial(r, m - r))
                self._polys.append(total.shift(1))
            logger.debug(f"basic format table extended to n={n}")
        return self._polys[n]


_basic_table = _BasicTable()


def basic_polynomial(n: int) -> BigPolynomial:
    """a_n as a polynomial in x."""
    if n < 1:
        raise ParameterError(f"n must be at least 1, got {n}")
    return _basic_table.get(n)


def basic_format(n: int) -> BasicFormat:
    """
    Coefficients xi_r of a_n in the monomial basis.

    Args:
        n: Index (>= 1)

    Returns:
        BasicFormat with only the nonzero xi_r

    Example:
        basic_format(6).xi -> {4: 8, 5: 86, 6: 120}
    """
    return BasicFormat(n=n, xi=basic_polynomial(n).terms())


def binomial_format(n: int) -> BinomialFormat:
    """
    Coefficients P(n, r) of a_n in the basis x^r (1+x)^(n-r).

    Every basis polynomial has lowest term x^r, so the system is triangular
    in ascending r: P(n, k) = xi_k - sum_{r<k} P(n, r) * C(n-r, k-r).

    Raises:
        FormatConsistencyError: if any P(n, k) is negative

    Example:
        binomial_format(6).prim -> {4: 8, 5: 70, 6: 42}
    """
    xi = basic_polynomial(n)
    prim: Dict[int, int] = {}
    for k in range(1, n + 1):
        value = xi.coefficient(k)
        for r, count in prim.items():
            value -= count * binomial(n - r, k - r)
        if value < 0:
            raise FormatConsistencyError(f"P({n},{k}) = {value} is negative")
        if value:
            prim[k] = value

    rebuilt = BinomialFormat(n=n, prim=prim).polynomial()
    if rebuilt != xi:
        raise FormatConsistencyError(f"binomial format of a_{n} does not expand back to a_{n}")
    return BinomialFormat(n=n, prim=prim)


def min_weight(n: int) -> int:
    """Smallest exponent r with xi_r != 0: ceil(log2 n) + 1 for n >= 2."""
    if n < 1:
        raise ParameterError(f"n must be at least 1, got {n}")
    if n == 1:
        return 1
    return (n - 1).bit_length() + 1
