"""
Projection Angles and Norm Diagnostics

theta_n is the angle between s_n and the dominant eigenspace

    E = span{ |x/y|^u cos(pi u), |x/y|^u sin(pi u) }

in the weighted inner product. Both basis functions have squared norm 1/2
and are orthogonal, so ||P s||^2 = 2 (<s, c>^2 + <s, s>^2) in closed form.
||P_perp s||^2 is integrated separately, by Gauss-Legendre quadrature of
the residual s - P s on every step, while ||s||^2 comes from the closed-form
step weights; ||P s||^2 + ||P_perp s||^2 = ||s||^2 then audits the
projection coefficients.

All quantities are computed on the scaled float view of s_n; angles and
ratios do not depend on the scale.

tan_regime_check compares consecutive tangents against the two-regime
decrease bound, with the constants of the operator gap 1/sqrt(n). Theta,
the uniform angle bound, is taken as the largest observed angle, so the
check is a diagnostic rather than a proof.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from exact_core.rationals import RationalLike
from pattern_dynamics import iter_s_sequences
from spectral.eigen import (
    dominant_moduli,
    exact_x,
    exp_integrals,
    exp_trig_integrals,
    weight_base,
)
from spectral.functions import embed_scaled

logger = logging.getLogger("binrec.spectral")

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(10)


# =============================================================================
# ANGLES
# =============================================================================

@dataclass
class AngleRecord:
    """Projection norms of s_n (in the scaled view) and its angle to E."""

    n: int
    proj_norm: float
    perp_norm: float
    theta: float
    tan_theta: float
    parseval_gap: float = 0.0

    def to_dict(self) -> dict:
        return {"n": self.n, "proj_norm": self.proj_norm, "perp_norm": self.perp_norm,
                "theta": self.theta, "tan_theta": self.tan_theta,
                "parseval_gap": self.parseval_gap}


@dataclass
class AngleTrace:
    x: float
    records: List[AngleRecord] = field(default_factory=list)

    def by_n(self) -> Dict[int, AngleRecord]:
        return {r.n: r for r in self.records}

    def sup_theta(self) -> float:
        return max((r.theta for r in self.records), default=0.0)


def _residual_norm_squared(
    values: np.ndarray, omega: float, alpha: float, beta: float
) -> float:
    """||s - P s||^2 by Gauss-Legendre quadrature on every step."""
    steps = len(values)
    half = 0.5 / steps
    v = ((np.arange(steps) + 0.5) / steps)[:, None] + half * _GAUSS_NODES[None, :]
    projected = omega**v * (alpha * np.cos(math.pi * v) + beta * np.sin(math.pi * v))
    integrand = (values[:, None] - projected) ** 2 * omega ** (-2.0 * v)
    return float(half * np.sum(integrand * _GAUSS_WEIGHTS[None, :]))


def projection_angle(values: np.ndarray, omega: float, n: int = 0) -> AngleRecord:
    """
    Angle between a step function (given by its values) and E.

    Args:
        values: Step values on uniform intervals
        omega: |x/y|
        n: Label stored in the record
    """
    values = np.asarray(values, dtype=float)
    steps = len(values)
    edges = np.arange(steps + 1) / steps
    lo, hi = edges[:-1], edges[1:]
    cos_part, sin_part = exp_trig_integrals(-math.log(omega), math.pi, lo, hi)
    weights = exp_integrals(-2.0 * math.log(omega), lo, hi)

    c0 = float(np.dot(values, cos_part))
    s0 = float(np.dot(values, sin_part))
    total = float(np.dot(values * values, weights))
    proj_sq = 2.0 * (c0 * c0 + s0 * s0)

    # P s = omega^v (alpha cos + beta sin) with alpha = 2 c0, beta = 2 s0
    perp_sq = _residual_norm_squared(values, omega, 2.0 * c0, 2.0 * s0)

    proj, perp = math.sqrt(proj_sq), math.sqrt(perp_sq)
    theta = math.atan2(perp, proj)
    tan_theta = perp / proj if proj > 0 else math.inf
    gap = abs(proj_sq + perp_sq - total) / total if total > 0 else 0.0
    return AngleRecord(n, proj, perp, theta, tan_theta, gap)


def angle_trace(x: RationalLike, n_max: int, n_min: int = 3) -> AngleTrace:
    """
    theta_n for n_min <= n <= n_max, from the exact S_n pipeline.

    Example:
        angle_trace("-1/2", 300, 50) -> theta_300 well below theta_50
    """
    value = exact_x(x)
    omega = weight_base(value)
    trace = AngleTrace(x=float(value))
    for s in iter_s_sequences(value, n_max):
        if s.n < max(n_min, 2):
            continue
        floats, log_scale = embed_scaled(s)
        if log_scale == float("-inf"):
            continue
        trace.records.append(projection_angle(floats, omega, s.n))
    return trace


# =============================================================================
# TAN REGIMES
# =============================================================================

@dataclass
class RegimeViolation:
    n: int
    regime: str
    tan_now: float
    tan_next: float
    bound: float

    def to_dict(self) -> dict:
        return {"n": self.n, "regime": self.regime, "tan_now": self.tan_now,
                "tan_next": self.tan_next, "bound": self.bound}


@dataclass
class RegimeReport:
    """Outcome of the two-regime check over one trace."""

    x: float
    threshold: float
    theta_sup: float
    checked: int = 0
    skipped: int = 0
    regime_a: int = 0
    regime_b: int = 0
    violations: List[RegimeViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def verified(self) -> bool:
        """At least one step lay past the threshold and was compared."""
        return self.checked > 0

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "threshold": self.threshold,
            "verified": self.verified,
            "theta_sup": self.theta_sup,
            "checked": self.checked,
            "skipped": self.skipped,
            "regime_a": self.regime_a,
            "regime_b": self.regime_b,
            "violations": [v.to_dict() for v in self.violations],
        }


def tan_regime_check(trace: AngleTrace, x: RationalLike) -> RegimeReport:
    """
    Check the decrease of tan(theta_n) step by step.

    For n above 9 / (cos^2(Theta) (lambda - mu)^2):

    - regime a, sqrt(n) sin(theta_n) >= 3/(lambda - mu):
      tan(theta_{n+1}) < (2 mu + lambda)/(2 lambda + mu) tan(theta_n)
    - regime b, otherwise:
      tan(theta_{n+1}) < (3 mu/(lambda - mu) + 1) / (lambda sqrt(n - 9/(lambda - mu)^2) - 1)
      (steps where that denominator is not positive are skipped)

    A report that checked no step is not verified; see RegimeReport.verified.
    """
    lam, mu = dominant_moduli(x)
    gap = lam - mu
    theta_sup = trace.sup_theta()
    cos_sq = math.cos(theta_sup) ** 2
    threshold = math.inf if cos_sq == 0.0 else 9.0 / (cos_sq * gap**2)
    report = RegimeReport(x=trace.x, threshold=threshold, theta_sup=theta_sup)

    by_n = trace.by_n()
    relative = (2 * mu + lam) / (2 * lam + mu)
    for n in sorted(by_n):
        nxt = by_n.get(n + 1)
        if nxt is None:
            continue
        now = by_n[n]
        if n <= threshold:
            report.skipped += 1
            continue
        if math.sqrt(n) * math.sin(now.theta) >= 3.0 / gap:
            report.regime_a += 1
            bound = relative * now.tan_theta
            regime = "a"
        else:
            denominator = lam * math.sqrt(n - 9.0 / gap**2) - 1.0
            if denominator <= 0.0:
                report.skipped += 1
                continue
            report.regime_b += 1
            bound = (3.0 * mu / gap + 1.0) / denominator
            regime = "b"
        report.checked += 1
        if not nxt.tan_theta < bound:
            report.violations.append(RegimeViolation(n, regime, now.tan_theta, nxt.tan_theta,
                                                     bound))
    if report.violations:
        logger.warning(f"tan regime check x={trace.x}: {len(report.violations)} violations")
    return report


# =============================================================================
# NORM DIAGNOSTICS
# =============================================================================

@dataclass
class NormRatioRecord:
    n: int
    ratio: float

    def to_dict(self) -> dict:
        return {"n": self.n, "ratio": self.ratio}


def norm_ratio_trace(x: RationalLike, n_min: int, n_max: int) -> List[NormRatioRecord]:
    """
    ||s_n||_1 / ||s_n||_inf for n_min <= n <= n_max.

    On uniform steps the ratio is sum|S_n(j)| / ((n-1) max|S_n(j)|),
    computed exactly and rounded once.
    """
    value = exact_x(x)
    records = []
    for s in iter_s_sequences(value, n_max):
        if s.n < max(n_min, 2):
            continue
        magnitudes = [abs(v) for v in s.scaled[1:]]
        peak = max(magnitudes)
        if peak == 0:
            continue
        records.append(NormRatioRecord(s.n, float(Fraction(sum(magnitudes),
                                                           (s.n - 1) * peak))))
    return records


@dataclass
class AlignmentRecord:
    n: int
    ratio: float
    reaches_half: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "ratio": self.ratio, "reaches_half": self.reaches_half}


def _projection_primitive(alpha: float, beta: float, a: float, u: float) -> float:
    """Primitive of e^(a u) (alpha cos(pi u) + beta sin(pi u))."""
    denom = a * a + math.pi**2
    c, s = math.cos(math.pi * u), math.sin(math.pi * u)
    return math.exp(a * u) * (alpha * (a * c + math.pi * s) + beta * (a * s - math.pi * c)) / denom


def projection_alignment(
    x: RationalLike, n_min: int, n_max: int
) -> List[AlignmentRecord]:
    """
    |integral P s_n| / integral |P s_n| for n_min <= n <= n_max.

    P s_n = omega^u (alpha cos(pi u) + beta sin(pi u)) changes sign at most
    once in [0, 1], so both integrals are closed-form. Indices where the
    ratio reaches 1/2 form the subsequence along which the integral of s_n
    stays comparable to its norm.
    """
    value = exact_x(x)
    omega = weight_base(value)
    a = math.log(omega)
    records = []
    for s in iter_s_sequences(value, n_max):
        if s.n < max(n_min, 2):
            continue
        floats, log_scale = embed_scaled(s)
        if log_scale == float("-inf"):
            continue
        steps = len(floats)
        edges = np.arange(steps + 1) / steps
        cos_part, sin_part = exp_trig_integrals(-a, math.pi, edges[:-1], edges[1:])
        alpha = 2.0 * float(np.dot(floats, cos_part))
        beta = 2.0 * float(np.dot(floats, sin_part))

        def primitive(u: float) -> float:
            return _projection_primitive(alpha, beta, a, u)

        signed = primitive(1.0) - primitive(0.0)
        phi = math.atan2(beta, alpha)
        zero = ((phi + math.pi / 2) / math.pi) % 1.0
        if 0.0 < zero < 1.0:
            absolute = abs(primitive(zero) - primitive(0.0)) + abs(primitive(1.0) - primitive(zero))
        else:
            absolute = abs(signed)
        ratio = abs(signed) / absolute if absolute > 0 else 0.0
        records.append(AlignmentRecord(s.n, ratio, ratio >= 0.5))
    return records


def first_alignment(records: List[AlignmentRecord]) -> Optional[int]:
    """Smallest n whose alignment ratio reaches 1/2."""
    return next((r.n for r in records if r.reaches_half), None)
