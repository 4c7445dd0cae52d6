"""
Step and Piecewise-Linear Functions on [0, 1]

StepFunction holds exact values on the uniform intervals
[(j-1)/N, j/N), j = 1..N. Values stay exact (Fractions) until a float view
is requested; the float view is scaled by the largest numerator so that
values of factorial size never overflow.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np

from exact_core import scaled_floats
from pattern_dynamics import SSequence

Number = Union[Fraction, int, float]


@dataclass(frozen=True)
class StepFunction:
    """Piecewise-constant function with N uniform steps on [0, 1)."""

    values: Tuple[Number, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a step function needs at least one interval")

    @classmethod
    def constant(cls, value: Number, n_intervals: int) -> "StepFunction":
        return cls((value,) * n_intervals)

    @property
    def n_intervals(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (Fraction, int)) for v in self.values)

    def breakpoints(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.n_intervals + 1)

    def integral(self) -> Number:
        """Exact when the values are exact."""
        if self.is_exact:
            return sum((Fraction(v) for v in self.values), Fraction(0)) / self.n_intervals
        return math.fsum(float(v) for v in self.values) / self.n_intervals

    def as_floats(self) -> Tuple[np.ndarray, float]:
        """
        Float values divided by a common scale, and the natural log of that scale.

        Exact values are brought to a common denominator first so the
        division is correctly rounded; float values are returned as they are
        with log scale 0.
        """
        if not self.is_exact:
            return np.asarray(self.values, dtype=float), 0.0
        fracs = [Fraction(v) for v in self.values]
        common = math.lcm(*(f.denominator for f in fracs))
        numerators = [f.numerator * (common // f.denominator) for f in fracs]
        floats, log_scale = scaled_floats(numerators, common)
        return np.asarray(floats, dtype=float), log_scale

    def to_floats(self) -> np.ndarray:
        """Unscaled float values; may overflow for very large exact values."""
        floats, log_scale = self.as_floats()
        if log_scale == float("-inf"):
            return floats
        return floats * math.exp(log_scale)

    def __call__(self, u: Union[float, np.ndarray]) -> np.ndarray:
        index = np.clip(np.floor(np.asarray(u) * self.n_intervals).astype(int), 0,
                        self.n_intervals - 1)
        return self.to_floats()[index]


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous function given by node values on sorted breakpoints in [0, 1]."""

    breakpoints: np.ndarray
    values: np.ndarray
    log_scale: float = 0.0

    def __call__(self, u: Union[float, np.ndarray]) -> np.ndarray:
        """Evaluate the scaled function (multiply by exp(log_scale) for true values)."""
        return np.interp(u, self.breakpoints, self.values)


def embed(s: SSequence) -> StepFunction:
    """
    Step function s_n with values S_n(j)/(n-2)! on [(j-1)/(n-1), j/(n-1)).

    Its integral over [0, 1] is a_n/(n-1)!.

    Example:
        x = -1/2, n = 4: S_4 = (0, 1/8, 1/8) -> steps (0, 1/16, 1/16)
    """
    if s.n < 2:
        raise ValueError(f"embedding needs n >= 2, got {s.n}")
    factorial = math.factorial(s.n - 2)
    return StepFunction(tuple(v / factorial for v in s.values))


def embed_scaled(s: SSequence) -> Tuple[np.ndarray, float]:
    """Float view of embed(s) without building the Fractions."""
    denominator = s.denominator * math.factorial(s.n - 2)
    floats, log_scale = scaled_floats(s.scaled[1:], denominator)
    return np.asarray(floats, dtype=float), log_scale


def step_from_floats(values: Sequence[float]) -> StepFunction:
    return StepFunction(tuple(float(v) for v in values))
