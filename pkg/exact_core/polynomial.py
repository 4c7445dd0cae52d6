"""
Dense Integer Polynomials

A polynomial in x is a tuple of arbitrary-precision integer coefficients,
index = degree. Trailing zeros are always trimmed, so the zero polynomial is
the empty tuple. Degrees stay in the hundreds while coefficients grow
factorially, which is why the representation is dense.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from exact_core.binomials import binomial

Scalar = Union[int, Fraction]


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class BigPolynomial:
    """Immutable integer-coefficient polynomial in one variable."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in self.coefficients))

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @classmethod
    def zero(cls) -> "BigPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "BigPolynomial":
        """coefficient * x**degree"""
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_mapping(cls, terms: Dict[int, int]) -> "BigPolynomial":
        """Build from {degree: coefficient}."""
        if not terms:
            return cls.zero()
        coeffs = [0] * (max(terms) + 1)
        for degree, coefficient in terms.items():
            coeffs[degree] += coefficient
        return cls(tuple(coeffs))

    @classmethod
    def binomial_basis(cls, r: int, k: int) -> "BigPolynomial":
        """x**r * (1 + x)**k, expanded."""
        return cls((0,) * r + tuple(binomial(k, j) for j in range(k + 1)))

    # =========================================================================
    # QUERIES
    # =========================================================================

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def terms(self) -> Dict[int, int]:
        """Nonzero coefficients as {degree: coefficient}."""
        return {d: c for d, c in enumerate(self.coefficients) if c != 0}

    def __call__(self, x: Scalar) -> Scalar:
        return poly_eval(self, x)

    # =========================================================================
    # ARITHMETIC
    # =========================================================================

    def __add__(self, other: "BigPolynomial") -> "BigPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return BigPolynomial(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    def __neg__(self) -> "BigPolynomial":
        return BigPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "BigPolynomial") -> "BigPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["BigPolynomial", int]) -> "BigPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return BigPolynomial.zero()
        product = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                product[i + j] += ca * cb
        return BigPolynomial(tuple(product))

    __rmul__ = __mul__

    def scale(self, factor: int) -> "BigPolynomial":
        return BigPolynomial(tuple(factor * c for c in self.coefficients))

    def shift(self, k: int = 1) -> "BigPolynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return BigPolynomial((0,) * k + self.coefficients)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for degree, c in self.terms().items():
            if degree == 0:
                parts.append(str(c))
            elif degree == 1:
                parts.append(f"{c}x")
            else:
                parts.append(f"{c}x^{degree}")
        return " + ".join(parts)


def poly_eval(p: BigPolynomial, x: Scalar) -> Scalar:
    """
    Evaluate exactly by Horner's rule.

    Args:
        p: The polynomial
        x: An exact rational (or integer) point

    Returns:
        p(x) with no rounding; 0 for the zero polynomial
    """
    result: Scalar = 0
    for c in reversed(p.coefficients):
        result = result * x + c
    return result
