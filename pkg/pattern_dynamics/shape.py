"""
Shape Analysis of S_n

Structural events of S_n, all plateau-aware and compared exactly:

- sign change at (a, b): S(a) < 0 = S(a+1) = ... = S(b-1) < S(b) (up), or
  the mirror image (down)
- extreme at (a, b): S(a) < S(a+1) = ... = S(b-1) > S(b) (maximum), or the
  mirror image (minimum)
- inflection at (a, b): S_{n-1} has an extreme at (a+1, b) whose two base
  values share the extreme's sign (both > 0 for a maximum, both < 0 for a
  minimum)

Sign changes and extremes are searched on S_n(0..n-2): the auxiliary term
takes part, S_n(n-1) never does. Since S_n(r) - S_n(r-1) = -S_{n-1}(r),
extremes of S_n mirror sign changes of S_{n-1}, and inflections of S_n
mirror extremes of S_{n-1}. When the mirrored event of S_{n-1} sits on its
auxiliary term, the event of S_n has no locus inside the window; it is
recorded as a boundary event instead.

For x in (-1, 0) and n >= 6 the expected picture is one sign change, one
extreme (or boundary extreme), one inflection (or boundary inflection),
maxima positive and minima negative, at most one zero, an extreme inside
the band spanned by the endpoint values, and fixed slopes at the left end
whenever the extreme starts past the auxiliary term (a > 0).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exact_core import format_rational, parse_rational
from exact_core.rationals import RationalLike
from pattern_dynamics.sequence import SSequence, iter_s_sequences
from recursion_engine import ParameterError

logger = logging.getLogger("binrec.pattern_dynamics")


@dataclass(frozen=True)
class Locus:
    """Event location (a, b) and kind: up/down for changes, max/min for extremes."""

    a: int
    b: int
    kind: str

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "kind": self.kind}


@dataclass
class ShapeReport:
    """Events found in one S_n."""

    n: int
    x: Fraction
    sign_changes: List[Locus] = field(default_factory=list)
    extremes: List[Locus] = field(default_factory=list)
    inflections: List[Locus] = field(default_factory=list)
    zero_count: int = 0
    boundary_extreme: bool = False
    boundary_inflection: bool = False

    @property
    def sign_change_locus(self) -> Optional[Locus]:
        return self.sign_changes[0] if self.sign_changes else None

    @property
    def extreme_locus(self) -> Optional[Locus]:
        return self.extremes[0] if self.extremes else None

    @property
    def inflection_locus(self) -> Optional[Locus]:
        return self.inflections[0] if self.inflections else None

    def one_of_each(self) -> bool:
        """One sign change, one extreme and one inflection, boundary events included."""
        return (
            len(self.sign_changes) == 1
            and len(self.extremes) + int(self.boundary_extreme) == 1
            and len(self.inflections) + int(self.boundary_inflection) == 1
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "x": format_rational(self.x),
            "sign_changes": [loc.to_dict() for loc in self.sign_changes],
            "extremes": [loc.to_dict() for loc in self.extremes],
            "inflections": [loc.to_dict() for loc in self.inflections],
            "zero_count": self.zero_count,
            "boundary_extreme": self.boundary_extreme,
            "boundary_inflection": self.boundary_inflection,
        }


@dataclass
class ShapeViolation:
    """A shape property that failed at one n."""

    n: int
    x: Fraction
    clause: str
    detail: str

    def to_dict(self) -> dict:
        return {"n": self.n, "x": format_rational(self.x), "clause": self.clause,
                "detail": self.detail}


@dataclass
class ShapeScan:
    """Reports and violations for a range of n at one x."""

    x: Fraction
    reports: List[ShapeReport] = field(default_factory=list)
    violations: List[ShapeViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# =============================================================================
# EVENT DETECTION
# =============================================================================

def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def find_sign_changes(values: Sequence[int], offset: int = 0) -> List[Locus]:
    """Sign changes of a sequence; zero runs between opposite signs form the plateau."""
    changes = []
    last_index, last_sign = None, 0
    for i, v in enumerate(values):
        sign = _sign(v)
        if sign == 0:
            continue
        if last_sign and sign != last_sign:
            kind = "up" if last_sign < 0 else "down"
            changes.append(Locus(last_index + offset, i + offset, kind))
        last_index, last_sign = i, sign
    return changes


def _runs(values: Sequence[int]) -> List[Tuple[int, int, int]]:
    """(first index, last index, value) of maximal constant runs."""
    runs = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] != values[start]:
            runs.append((start, i - 1, values[start]))
            start = i
    return runs


def find_extremes(values: Sequence[int], offset: int = 0) -> List[Locus]:
    """Strict local extremes with a base on each side; plateaus allowed at the top."""
    runs = _runs(values)
    extremes = []
    for k in range(1, len(runs) - 1):
        prev_v, (_, _, v), next_v = runs[k - 1][2], runs[k], runs[k + 1][2]
        a, b = runs[k - 1][1] + offset, runs[k + 1][0] + offset
        if prev_v < v > next_v:
            extremes.append(Locus(a, b, "max"))
        elif prev_v > v < next_v:
            extremes.append(Locus(a, b, "min"))
    return extremes


def _window(s: SSequence) -> Tuple[int, ...]:
    return s.scaled[: s.n - 1]


def _inflections(prev: SSequence) -> Tuple[List[Locus], bool]:
    candidates = [e for e in find_extremes(_window(prev)) if e.a >= 1]
    found = []
    for e in candidates:
        left, right = prev.scaled[e.a], prev.scaled[e.b]
        if e.kind == "max" and left > 0 and right > 0:
            found.append(Locus(e.a - 1, e.b, "max"))
        elif e.kind == "min" and left < 0 and right < 0:
            found.append(Locus(e.a - 1, e.b, "min"))
    return found, not candidates


def shape_report(s: SSequence) -> ShapeReport:
    """
    Detect sign changes, extremes and inflections of S_n.

    Sign changes are searched from n = 4, extremes from n = 5 and
    inflections from n = 6 (using the S_{n-1} carried by s).

    Raises:
        ParameterError: x outside (-1, 0), or S_{n-1} missing when n >= 5
    """
    if not -1 < s.x < 0:
        raise ParameterError(f"shape analysis needs x in (-1, 0), got {s.x}")
    report = ShapeReport(n=s.n, x=s.x)
    report.zero_count = sum(1 for v in s.scaled[1:] if v == 0)
    window = _window(s)

    if s.n >= 4:
        report.sign_changes = find_sign_changes(window)
    if s.n >= 5:
        if s.previous is None:
            raise ParameterError(f"shape analysis of S_{s.n} needs S_{s.n - 1}")
        report.extremes = find_extremes(window)
        prev_changes = find_sign_changes(_window(s.previous))
        report.boundary_extreme = any(c.a == 0 for c in prev_changes)
    if s.n >= 6:
        report.inflections, report.boundary_inflection = _inflections(s.previous)
    return report


def locus_phase(a: int, n: int) -> Fraction:
    """Position of index a in [0, 1]: (a - 1/2) / (n - 1)."""
    return (Fraction(a) - Fraction(1, 2)) / (n - 1)


def sign_change_phase(s: SSequence) -> Optional[Fraction]:
    """z_n = (a - 1/2)/(n - 1) for the sign change at (a, b); None if there is none."""
    changes = find_sign_changes(_window(s)) if s.n >= 4 else []
    if not changes:
        return None
    return locus_phase(changes[0].a, s.n)


# =============================================================================
# PROPERTY SCAN
# =============================================================================

def _check(s: SSequence, report: ShapeReport) -> List[ShapeViolation]:
    violations = []

    def fail(clause: str, detail: str) -> None:
        violations.append(ShapeViolation(s.n, s.x, clause, detail))

    if not report.one_of_each():
        fail(
            "one_of_each",
            f"{len(report.sign_changes)} sign changes, {len(report.extremes)} extremes "
            f"(boundary={report.boundary_extreme}), {len(report.inflections)} inflections "
            f"(boundary={report.boundary_inflection})",
        )

    for e in report.extremes:
        top = s.scaled[e.a + 1]
        if (e.kind == "max" and top <= 0) or (e.kind == "min" and top >= 0):
            fail("extreme_sign", f"{e.kind} at ({e.a},{e.b}) has value {top}/{s.denominator}")

    if report.zero_count > 1:
        fail("single_zero", f"{report.zero_count} zeros")

    values = s.scaled[1:]
    low_end, high_end = sorted((s.scaled[0], s.scaled[-1]))
    if not (low_end <= min(values) <= high_end or low_end <= max(values) <= high_end):
        fail("extreme_band", "neither min nor max lies between x a_{n-1} and y a_{n-1}")

    # slopes are only fixed for an extreme past the auxiliary term
    extreme, inflection = report.extreme_locus, report.inflection_locus
    if extreme and inflection and extreme.a > 0:
        p0, p1, p2 = s.previous.scaled[:3]
        if extreme.kind == "min":
            p0, p1, p2 = -p0, -p1, -p2
        if extreme.a <= inflection.a:
            ok = p0 <= p1 <= p2 < 0
        else:
            ok = 0 > p0 >= p1 >= p2
        if not ok:
            fail(
                "endpoint_slopes",
                f"{extreme.kind} at {extreme.a}, inflection at {inflection.a}: "
                f"S_{s.n - 1}(0..2) numerators {s.previous.scaled[:3]}",
            )
    return violations


def shape_scan(x: RationalLike, n_max: int, n_min: int = 6) -> ShapeScan:
    """
    Run shape_report for n_min <= n <= n_max and check the shape properties.

    Args:
        x: Rational in (-1, 0)
        n_max: Last index
        n_min: First index (>= 6)

    Returns:
        ShapeScan whose violations list is empty on success
    """
    value = parse_rational(x)
    if not -1 < value < 0:
        raise ParameterError(f"shape analysis needs x in (-1, 0), got {value}")
    if n_min < 6:
        raise ParameterError(f"shape scans start at n = 6, got {n_min}")

    scan = ShapeScan(x=value)
    for s in iter_s_sequences(value, n_max):
        if s.n < n_min:
            continue
        report = shape_report(s)
        scan.reports.append(report)
        scan.violations.extend(_check(s, report))
    if scan.violations:
        logger.warning(f"shape scan x={value}: {len(scan.violations)} violations")
    return scan
