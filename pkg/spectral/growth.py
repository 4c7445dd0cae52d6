"""
Growth Rate of a_n / (n-1)!

For x in (-1, 0) the ratios r_n = |a_n| / (n-1)! decay like lambda^n along
a subsequence, with lambda = |lambda_0| the dominant eigenvalue modulus of
the limit operator. growth_rate fits log r_n against n by least squares
and reports the slope next to the prediction log(lambda).

log r_n is computed from the exact integers A_n = a_n q^n, so nothing is
converted to float before the logarithm.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np
from scipy import stats

from exact_core.rationals import RationalLike
from recursion_engine import scaled_a_sequence
from spectral.eigen import dominant_moduli, exact_x

logger = logging.getLogger("binrec.spectral")


class DegenerateFitError(ValueError):
    """Raised when too few r_n are nonzero for a meaningful fit."""


def log_ratios(x: RationalLike, n_lo: int, n_hi: int) -> List[tuple]:
    """
    (n, log r_n) for n_lo <= n <= n_hi, skipping vanishing a_n.

    Example:
        log_ratios("-1/2", 4, 4) -> [(4, log(1/24))]
    """
    value = exact_x(x)
    if n_lo < 1 or n_hi < n_lo:
        raise ValueError(f"need 1 <= n_lo <= n_hi, got {n_lo}:{n_hi}")
    numerators, q = scaled_a_sequence(value, n_hi)
    log_q = math.log(q)
    points = []
    for n in range(n_lo, n_hi + 1):
        a = numerators[n - 1]
        if a == 0:
            continue
        points.append((n, math.log(abs(a)) - n * log_q - math.lgamma(n)))
    return points


@dataclass
class GrowthFit:
    """Least-squares line through (n, log r_n)."""

    x: float
    n_lo: int
    n_hi: int
    slope: float
    intercept: float
    predicted: float
    rvalue: float
    stderr: float
    points: List[tuple] = field(default_factory=list, repr=False)

    @property
    def relative_error(self) -> float:
        return abs(self.slope - self.predicted) / abs(self.predicted)

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "slope": self.slope,
            "intercept": self.intercept,
            "predicted": self.predicted,
            "relative_error": self.relative_error,
            "rvalue": self.rvalue,
            "stderr": self.stderr,
            "points": len(self.points),
        }


def growth_rate(x: RationalLike, n_lo: int, n_hi: int) -> GrowthFit:
    """
    Fit the slope of log(|a_n| / (n-1)!) over [n_lo, n_hi].

    Args:
        x: Parameter in (-1, 0)
        n_lo: First index of the fit window
        n_hi: Last index of the fit window

    Returns:
        GrowthFit with the fitted slope and predicted = log(lambda)

    Raises:
        DomainError: x outside (-1, 0)
        DegenerateFitError: fewer than max(3, half the window) nonzero r_n

    Example:
        growth_rate("-1/2", 150, 300).slope -> close to log(1/pi) = -1.1447
    """
    points = log_ratios(x, n_lo, n_hi)
    window = n_hi - n_lo + 1
    needed = max(3, (window + 1) // 2)
    if len(points) < needed:
        raise DegenerateFitError(
            f"only {len(points)} of {window} ratios are nonzero for x={x}; need {needed}"
        )

    ns = np.array([p[0] for p in points], dtype=float)
    logs = np.array([p[1] for p in points], dtype=float)
    fit = stats.linregress(ns, logs)
    lam, _ = dominant_moduli(exact_x(x))

    result = GrowthFit(
        x=float(exact_x(x)),
        n_lo=n_lo,
        n_hi=n_hi,
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        predicted=math.log(lam),
        rvalue=float(fit.rvalue),
        stderr=float(fit.stderr),
        points=points,
    )
    logger.debug(
        f"growth fit x={x} [{n_lo}, {n_hi}]: slope={result.slope:.5f} "
        f"predicted={result.predicted:.5f}"
    )
    return result
