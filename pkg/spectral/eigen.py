"""
Eigenstructure of the Limit Operator

For x in (-1, 0) the ratio x/y is negative and T has the eigenvalues

    lambda_m = -1 / (log|x/y| + (2m+1) pi i),     m in Z

with eigenfunctions f_m(u) = |x/y|^u exp((2m+1) pi i u). lambda_{-1}, lambda_0
share the largest modulus lambda; lambda_{-2}, lambda_1 the next one, mu.

The real parts |x/y|^u cos((2m+1) pi u) and imaginary parts
|x/y|^u sin((2m+1) pi u) are orthogonal for the weighted inner product

    <f, g> = integral_0^1 |x/y|^(-2v) f(v) g(v) dv

and each has squared norm 1/2. Inner products of step functions with these
functions are evaluated in closed form interval by interval.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import numpy as np

from exact_core import parse_rational
from spectral.functions import StepFunction

logger = logging.getLogger("binrec.spectral")

Scalar = Union[Fraction, int, float, str]


class DomainError(ValueError):
    """Raised when a spectral operation is called with x outside (-1, 0)."""


class Basis(Enum):
    """Real or imaginary part of an eigenfunction."""
    COS = "cos"
    SIN = "sin"


def spectral_x(x: Scalar) -> float:
    """x as a float, checked to lie in (-1, 0)."""
    if isinstance(x, str):
        value = float(Fraction(x))
    else:
        value = float(x)
    if not -1.0 < value < 0.0:
        raise DomainError(f"spectral operations need x in (-1, 0), got {x}")
    return value


def exact_x(x) -> Fraction:
    """x as an exact rational, checked to lie in (-1, 0)."""
    value = parse_rational(x)
    if not -1 < value < 0:
        raise DomainError(f"spectral operations need x in (-1, 0), got {value}")
    return value


def weight_base(x: Scalar) -> float:
    """omega = |x / y|."""
    value = spectral_x(x)
    return abs(value / (1.0 + value))


@dataclass(frozen=True)
class Eigenpair:
    """(lambda_m, f_m) for one index m."""

    m: int
    lambda_m: complex
    x: float

    @property
    def omega(self) -> float:
        return abs(self.x / (1.0 + self.x))

    @property
    def frequency(self) -> float:
        return (2 * self.m + 1) * math.pi

    @property
    def exponent(self) -> complex:
        """c with f_m(u) = exp(c u); c = -1/lambda_m."""
        return complex(math.log(self.omega), self.frequency)

    def f(self, u: Union[float, np.ndarray]) -> np.ndarray:
        return np.exp(self.exponent * np.asarray(u, dtype=float))

    def to_dict(self) -> dict:
        return {"m": self.m, "re": self.lambda_m.real, "im": self.lambda_m.imag,
                "abs": abs(self.lambda_m)}


def eigenvalue(x: Scalar, m: int) -> complex:
    omega = weight_base(x)
    return -1.0 / complex(math.log(omega), (2 * m + 1) * math.pi)


def eigenpairs(x: Scalar, m_range: Iterable[int] = range(-2, 2)) -> List[Eigenpair]:
    """
    Eigenpairs of T for the requested indices.

    Example:
        abs(eigenpairs(-0.5, [0])[0].lambda_m) -> 1/pi
    """
    value = spectral_x(x)
    return [Eigenpair(m, eigenvalue(value, m), value) for m in m_range]


def dominant_moduli(x: Scalar) -> Tuple[float, float]:
    """(lambda, mu) = (|lambda_0|, |lambda_1|)."""
    return abs(eigenvalue(x, 0)), abs(eigenvalue(x, 1))


def eigen_residual(pair: Eigenpair, grid_points: int = 10_000) -> float:
    """
    max |T f_m - lambda_m f_m| over a uniform grid on [0, 1].

    f_m is sampled on the grid; T f_m = -F(u) + y F(1) - x F(0) uses the
    exact primitive F(u) = f_m(u)/c evaluated at the same points.
    """
    u = np.linspace(0.0, 1.0, grid_points)
    c = pair.exponent
    f = pair.f(u)
    primitive = f / c
    y = 1.0 + pair.x
    image = -primitive + y * primitive[-1] - pair.x * primitive[0]
    return float(np.max(np.abs(image - pair.lambda_m * f)))


def exp_check(pair: Eigenpair) -> float:
    """|exp(-1/lambda_m) - x/y|."""
    return abs(cmath.exp(-1.0 / pair.lambda_m) - pair.x / (1.0 + pair.x))


# =============================================================================
# WEIGHTED INNER PRODUCTS
# =============================================================================

def exp_trig_integrals(a: float, k: float, lo: np.ndarray, hi: np.ndarray):
    """integral of e^(a v) cos(k v) and e^(a v) sin(k v) over [lo, hi]."""
    denom = a * a + k * k

    def cos_primitive(v):
        return np.exp(a * v) * (a * np.cos(k * v) + k * np.sin(k * v)) / denom

    def sin_primitive(v):
        return np.exp(a * v) * (a * np.sin(k * v) - k * np.cos(k * v)) / denom

    return cos_primitive(hi) - cos_primitive(lo), sin_primitive(hi) - sin_primitive(lo)


def exp_integrals(b: float, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """integral of e^(b v) over [lo, hi]."""
    width = hi - lo
    if b == 0.0:
        return width
    return np.exp(b * lo) * np.expm1(b * width) / b


def basis_inner_products(values: np.ndarray, omega: float, m: int = 0) -> Tuple[float, float]:
    """
    (<s, omega^v cos(k v)>, <s, omega^v sin(k v)>) for step values on uniform steps.

    The weight omega^(-2v) times omega^v leaves e^(a v) with a = -log(omega).
    """
    n_steps = len(values)
    edges = np.arange(n_steps + 1) / n_steps
    cos_part, sin_part = exp_trig_integrals(-math.log(omega), (2 * m + 1) * math.pi,
                                             edges[:-1], edges[1:])
    return float(np.dot(values, cos_part)), float(np.dot(values, sin_part))


def weighted_inner(s: StepFunction, basis: Basis, m: int, x: Scalar) -> float:
    """
    <s, g> with g = |x/y|^v cos((2m+1) pi v) or the sine version.

    Args:
        s: Step function
        basis: Basis.COS or Basis.SIN
        m: Eigenvalue index
        x: Parameter in (-1, 0)

    Returns:
        The inner product in true scale (may overflow for huge exact inputs)
    """
    omega = weight_base(x)
    floats, log_scale = s.as_floats()
    if log_scale == float("-inf"):
        return 0.0
    cos_value, sin_value = basis_inner_products(floats, omega, m)
    value = cos_value if basis is Basis.COS else sin_value
    return value * math.exp(log_scale)


def weighted_norm_squared(values: np.ndarray, omega: float) -> float:
    n_steps = len(values)
    edges = np.arange(n_steps + 1) / n_steps
    weights = exp_integrals(-2.0 * math.log(omega), edges[:-1], edges[1:])
    return float(np.dot(values * values, weights))


def weighted_norm(s: StepFunction, x: Scalar) -> float:
    """sqrt(<s, s>) in the weighted inner product."""
    omega = weight_base(x)
    floats, log_scale = s.as_floats()
    if log_scale == float("-inf"):
        return 0.0
    return math.sqrt(weighted_norm_squared(floats, omega)) * math.exp(log_scale)
