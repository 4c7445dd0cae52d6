"""
S_n Sequences

S_n(r) is the total contribution to a_n of the patterns ending in
t_{n-1} = r, so sum_{r=1}^{n-1} S_n(r) = a_n. Alongside the n-1 values we
keep the auxiliary term S_n(0) = y a_{n-1}, which is not part of the
sequence but takes part in the shape analysis.

One step of the recursion (y = 1 + x, T = sum_j S_n(j), P(r) = sum_{j<=r} S_n(j)):

    S_{n+1}(r) = x P(r) + y (T - P(r))     0 <= r <= n-1
    S_{n+1}(n) = S_{n+1}(n-1)

For x = p/q every S_n has the common denominator q^n, so the sequence is
stored as integer numerators and the step costs O(n) integer operations.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from exact_core import parse_rational, scaled_floats
from exact_core.rationals import RationalLike
from recursion_engine import ParameterError

logger = logging.getLogger("binrec.pattern_dynamics")


@dataclass(frozen=True)
class SSequence:
    """
    S_n(0..n-1) as numerators over a common positive denominator.

    scaled[0] is the auxiliary term, scaled[1..n-1] the sequence proper.
    previous holds S_{n-1} (itself without a previous) when this sequence
    came out of s_step.
    """

    x: Fraction
    n: int
    scaled: Tuple[int, ...]
    denominator: int
    previous: Optional["SSequence"] = None

    def __post_init__(self):
        if len(self.scaled) != self.n:
            raise ValueError(f"S_{self.n} needs {self.n} entries, got {len(self.scaled)}")
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    @property
    def y(self) -> Fraction:
        return 1 + self.x

    @property
    def aux(self) -> Fraction:
        """S_n(0) = y a_{n-1}."""
        return Fraction(self.scaled[0], self.denominator)

    @property
    def values(self) -> List[Fraction]:
        """S_n(1), ..., S_n(n-1)."""
        return [Fraction(v, self.denominator) for v in self.scaled[1:]]

    def value(self, r: int) -> Fraction:
        """S_n(r) for 0 <= r <= n-1."""
        return Fraction(self.scaled[r], self.denominator)

    def total(self) -> Fraction:
        """sum_{r>=1} S_n(r) = a_n."""
        return Fraction(sum(self.scaled[1:]), self.denominator)

    def float_values(self) -> Tuple[List[float], float]:
        """S_n(1..n-1) scaled into [-1, 1] plus the natural log of the dropped scale."""
        return scaled_floats(self.scaled[1:], self.denominator)

    def detached(self) -> "SSequence":
        """The same sequence without its predecessor."""
        if self.previous is None:
            return self
        return SSequence(self.x, self.n, self.scaled, self.denominator)


def _check_x(x: RationalLike) -> Fraction:
    value = parse_rational(x)
    if value == 0:
        raise ParameterError("x must be nonzero")
    return value


def initial_sequence(x: RationalLike) -> SSequence:
    """S_2: S_2(1) = x^2 with auxiliary term S_2(0) = y a_1 = x y."""
    value = _check_x(x)
    p, q = value.numerator, value.denominator
    return SSequence(value, 2, (p * (p + q), p * p), q * q)


def s_step(s: SSequence) -> SSequence:
    """
    S_{n+1} from S_n, exactly, with prefix sums.

    Example:
        x = -1/2: S_3 = (-1/8, -1/8) -> S_4 = (0, 1/8, 1/8), aux -1/8
    """
    p, q = s.x.numerator, s.x.denominator
    values = s.scaled[1:]
    total = sum(values)
    head = (p + q) * total

    scaled = [head]
    prefix = 0
    for v in values:
        prefix += v
        scaled.append(head - q * prefix)
    scaled.append(scaled[-1])
    return SSequence(s.x, s.n + 1, tuple(scaled), s.denominator * q, previous=s.detached())


def iter_s_sequences(x: RationalLike, n_max: int) -> Iterator[SSequence]:
    """Yield S_2, S_3, ..., S_{n_max}."""
    if n_max < 2:
        raise ParameterError(f"S sequences start at n = 2, got n_max = {n_max}")
    s = initial_sequence(x)
    yield s
    while s.n < n_max:
        s = s_step(s)
        yield s


def s_sequence(x: RationalLike, n: int) -> SSequence:
    """
    S_n for parameter x, iterated from S_2.

    Args:
        x: Nonzero rational
        n: Index (>= 2)

    Returns:
        The SSequence for n, carrying S_{n-1} as previous when n >= 3
    """
    s = None
    for s in iter_s_sequences(x, n):
        pass
    logger.debug(f"s_sequence x={s.x} n={n}")
    return s


def finite_difference_check(s_prev: SSequence, s: SSequence) -> bool:
    """
    Check S_{n+1}(r) = S_{n+1}(r-1) - S_n(r) for 1 <= r <= n-1.

    Compared by cross-multiplying numerators, so the two sequences may use
    any denominators.
    """
    if s.n != s_prev.n + 1 or s.x != s_prev.x:
        raise ValueError(f"S_{s_prev.n} and S_{s.n} are not consecutive for the same x")
    d_prev, d = s_prev.denominator, s.denominator
    for r in range(1, s_prev.n):
        if (s.scaled[r] - s.scaled[r - 1]) * d_prev != -s_prev.scaled[r] * d:
            return False
    return True
