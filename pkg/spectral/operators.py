"""
Integral Operators

A_n maps step functions with n-1 steps to step functions with n steps:

    (A_n s)(u) = integral_0^1 alpha_n(u, v) s(v) dv

with alpha_n = x on the rectangles (u in step i of n, v in step j of n-1)
where i >= j, and y = 1 + x elsewhere. In the limit the kernel becomes
kappa(u, v) = x for u >= v, y otherwise, which defines T:

    (T f)(u) = -F(u) + y F(1) - x F(0)      F any primitive of f

The two kernels differ (by |x - y| = 1) exactly on the staircase region
Omega_n = {i >= j, u < v}, of measure 1/n.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

import numpy as np

from exact_core import parse_rational
from spectral.functions import PiecewiseLinear, StepFunction

logger = logging.getLogger("binrec.spectral")

Scalar = Union[Fraction, int, float, str]


def _param(x: Scalar):
    if isinstance(x, float):
        return x
    return parse_rational(x)


def apply_A_n(s: StepFunction, n: int, x: Scalar) -> StepFunction:
    """
    Apply A_n to a step function with n-1 steps.

    Entry i is (x P_i + y (T - P_i)) / (n-1) with P_i the sum of the first i
    values and T the total; the top entry repeats entry n-1. Exact for
    exact input.

    Raises:
        ValueError: s does not have n-1 steps
    """
    if s.n_intervals != n - 1:
        raise ValueError(f"A_{n} acts on {n - 1} steps, got {s.n_intervals}")
    xv = _param(x)
    yv = 1 + xv
    if s.is_exact and not isinstance(xv, float):
        values: List = [Fraction(v) for v in s.values]
    else:
        values = [float(v) for v in s.values]
    total = sum(values)
    out = []
    prefix = 0
    for v in values:
        prefix += v
        out.append((xv * prefix + yv * (total - prefix)) / (n - 1))
    out.append(out[-1])
    return StepFunction(tuple(out))


def apply_T(s: StepFunction, x: Scalar) -> PiecewiseLinear:
    """
    Apply the limit operator to a step function.

    Uses the primitive F with F(0) = 0, so the image has node values
    -F(u_j) + y F(1) at the breakpoints u_j = j/N and is linear between them.
    The node values carry the same scale as s.as_floats().

    Example:
        s = 1, x = -1/2 -> (T s)(u) = 1/2 - u
    """
    floats, log_scale = s.as_floats()
    y = 1.0 + float(_param(x))
    primitive = np.concatenate(([0.0], np.cumsum(floats) / s.n_intervals))
    nodes = -primitive + y * primitive[-1]
    return PiecewiseLinear(s.breakpoints(), nodes, 0.0 if log_scale == float("-inf") else log_scale)


# =============================================================================
# KERNEL GAP
# =============================================================================

def _upper_area(u0, u1, v0, v1):
    """Area of [u0,u1] x [v0,v1] inside {u < v}; works on Fractions and numpy arrays."""
    height = v1 - v0
    if isinstance(u0, np.ndarray):
        below = np.clip(np.minimum(u1, v0) - u0, 0.0, None) * height
        a = np.maximum(u0, v0)
        b = np.minimum(u1, v1)
        wedge = np.where(b > a, ((v1 - a) ** 2 - (v1 - b) ** 2) / 2, 0.0)
        return below + wedge
    below = max(Fraction(0), min(u1, v0) - u0) * height
    a, b = max(u0, v0), min(u1, v1)
    wedge = ((v1 - a) ** 2 - (v1 - b) ** 2) / 2 if b > a else Fraction(0)
    return below + wedge


def staircase_measure(n: int) -> Fraction:
    """
    Exact Lebesgue measure of Omega_n by rectangle decomposition.

    Rectangle (i, j) meets {u < v} only when (i-1)/n < j/(n-1), so each
    column j contributes through i = j and i = j + 1 at most.
    """
    if n < 2:
        raise ValueError(f"the staircase needs n >= 2, got {n}")
    total = Fraction(0)
    for j in range(1, n):
        v0, v1 = Fraction(j - 1, n - 1), Fraction(j, n - 1)
        i = j
        while i <= n and Fraction(i - 1, n) < v1:
            total += _upper_area(Fraction(i - 1, n), Fraction(i, n), v0, v1)
            i += 1
    return total


def hilbert_schmidt_gap(n: int, refine: int = 1) -> float:
    """
    ||kappa - alpha_n|| in L2([0,1]^2), evaluated in floats on the common
    refinement of the two step grids.

    Every cell of the refinement has constant alpha_n; the diagonal cells
    are split exactly with the triangle-area formula.
    """
    cuts = np.union1d(np.arange(n + 1) / n, np.arange(n) / (n - 1))
    if refine > 1:
        sub = np.linspace(0.0, 1.0, refine + 1)[:-1]
        cuts = np.union1d(cuts, (cuts[:-1, None] + np.diff(cuts)[:, None] * sub).ravel())
    lo, hi = cuts[:-1], cuts[1:]
    mid = (lo + hi) / 2
    i_index = np.floor(mid * n).astype(int)
    j_index = np.floor(mid * (n - 1)).astype(int)

    u0, u1 = lo[:, None], hi[:, None]
    v0, v1 = lo[None, :], hi[None, :]
    area = _upper_area(np.broadcast_to(u0, (len(lo), len(lo))), u1, v0, v1)
    mask = i_index[:, None] >= j_index[None, :]
    return float(math.sqrt(np.sum(area[mask])))


@dataclass
class GapReport:
    """Staircase measure and kernel-gap norms for one n."""

    n: int
    measure: Fraction
    hs_norm: float
    bound: float
    tolerance: float = 1e-6

    @property
    def measure_ok(self) -> bool:
        return self.measure == Fraction(1, self.n)

    @property
    def norm_ok(self) -> bool:
        return self.hs_norm <= self.bound + self.tolerance

    @property
    def ok(self) -> bool:
        return self.measure_ok and self.norm_ok

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "measure": f"{self.measure.numerator}/{self.measure.denominator}",
            "hs_norm": self.hs_norm,
            "bound": self.bound,
            "ok": self.ok,
        }


def operator_gap(n: int, refine: int = 1, with_norm: bool = True) -> GapReport:
    """
    Exact measure of Omega_n and the Hilbert-Schmidt norm of kappa - alpha_n.

    Example:
        operator_gap(10).measure -> Fraction(1, 10)
    """
    measure = staircase_measure(n)
    hs = hilbert_schmidt_gap(n, refine) if with_norm else math.sqrt(float(measure))
    report = GapReport(n=n, measure=measure, hs_norm=hs, bound=1 / math.sqrt(n))
    logger.debug(f"operator gap n={n}: measure={measure} hs={hs:.3e}")
    return report


def operator_norm_estimate(n: int, grid: int = 400) -> float:
    """
    Spectral norm of the discretized kernel difference on a midpoint grid.

    The matrix D[a, b] = |kappa - alpha_n|(u_a, v_b) / grid is the Nystrom
    discretization of the integral operator; its 2-norm never exceeds its
    Frobenius norm, the grid version of the Hilbert-Schmidt norm.
    """
    if n < 2:
        raise ValueError(f"the kernel gap needs n >= 2, got {n}")
    mid = (np.arange(grid) + 0.5) / grid
    u, v = mid[:, None], mid[None, :]
    i_index = np.floor(u * n)
    j_index = np.floor(v * (n - 1))
    difference = ((i_index >= j_index) & (u < v)).astype(float) / grid
    return float(np.linalg.norm(difference, 2))
