"""
Monotone Lattice Paths

Paths are strings over {"E", "N"} (unit steps east and north). A path from
(0,0) to (m,m) "does not cross the diagonal" when it never rises above
y = x; there are C(2m, m)/(m+1) of them, which is catalan(m+1) in the
1, 1, 2, 5, 14 listing.

- monotone_path_count: brute-force count for paths to (n, n)
- reflection_check: first-touch reflection of crossing paths onto all
  paths to (n-1, n+1)
- nondecreasing_pattern_path_bijection: nondecreasing valid patterns of
  length n-1 against non-crossing paths to (n-1, n-1)
"""

import itertools
import logging
from typing import Iterator, List, Optional

from config import settings
from exact_core import binomial
from combinatorics.arrays import EnumerationCapError, Pattern, iter_nondecreasing_patterns
from combinatorics.records import VerificationRecord
from recursion_engine import catalan

logger = logging.getLogger("binrec.combinatorics")

_SWAP = {"E": "N", "N": "E"}


def _path_cap(n: int, cap: Optional[int]) -> None:
    limit = settings.path_cap if cap is None else cap
    if n > limit:
        raise EnumerationCapError(f"path enumeration refused for n={n}: cap is {limit}")


def stays_below_diagonal(path: str) -> bool:
    """True when every prefix has at least as many E steps as N steps."""
    height = 0
    for step in path:
        height += 1 if step == "N" else -1
        if height > 0:
            return False
    return True


def iter_noncrossing_paths(m: int) -> Iterator[str]:
    """Paths (0,0) -> (m,m) with y <= x throughout, in lexicographic order."""

    def walk(prefix: List[str], east: int, north: int) -> Iterator[str]:
        if east == m and north == m:
            yield "".join(prefix)
            return
        if east < m:
            prefix.append("E")
            yield from walk(prefix, east + 1, north)
            prefix.pop()
        if north < east:
            prefix.append("N")
            yield from walk(prefix, east, north + 1)
            prefix.pop()

    yield from walk([], 0, 0)


def iter_paths(east: int, north: int) -> Iterator[str]:
    """Every monotone path (0,0) -> (east, north)."""
    length = east + north
    for ups in itertools.combinations(range(length), north):
        steps = ["E"] * length
        for i in ups:
            steps[i] = "N"
        yield "".join(steps)


def monotone_path_count(n: int, cap: Optional[int] = None) -> int:
    """
    Count paths (0,0) -> (n,n) that never rise above the diagonal by enumeration.

    Example:
        monotone_path_count(3) -> 5
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    _path_cap(n, cap)
    return sum(1 for _ in iter_noncrossing_paths(n))


def reflect_after_first_touch(path: str) -> Optional[str]:
    """
    Swap E and N after the first point on y = x + 1.

    Returns None when the path never reaches that line.
    """
    height = 0
    for i, step in enumerate(path):
        height += 1 if step == "N" else -1
        if height == 1:
            return path[: i + 1] + "".join(_SWAP[s] for s in path[i + 1:])
    return None


def reflection_check(n: int, cap: Optional[int] = None) -> VerificationRecord:
    """
    Verify the reflection bijection behind the Catalan formula.

    Crossing paths to (n, n) are mapped onto paths to (n-1, n+1) by reflecting
    after the first touch of y = x + 1; the map must be injective, land in
    the target set, cover it, and invert itself.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    _path_cap(n, cap)

    images = set()
    crossing = 0
    round_trip = True
    for path in iter_paths(n, n):
        image = reflect_after_first_touch(path)
        if image is None:
            continue
        crossing += 1
        if image.count("N") != n + 1 or image.count("E") != n - 1:
            round_trip = False
        if reflect_after_first_touch(image) != path:
            round_trip = False
        images.add(image)

    target = binomial(2 * n, n - 1)
    passed = round_trip and len(images) == crossing == target
    noncrossing = binomial(2 * n, n) - crossing
    return VerificationRecord(
        name="reflection",
        n=n,
        passed=passed and noncrossing == catalan(n + 1),
        expected=target,
        observed=crossing,
        details={"distinct_images": len(images), "round_trip": round_trip,
                 "noncrossing": noncrossing},
    )


def pattern_to_path(pattern: Pattern) -> str:
    """
    Lattice path of a nondecreasing pattern.

    The j-th east step is taken at height t_j - 1; the path then climbs to
    (n-1, n-1).
    """
    steps: List[str] = []
    height = 0
    for value in pattern.t:
        steps.extend("N" * (value - 1 - height))
        height = value - 1
        steps.append("E")
    steps.extend("N" * (len(pattern.t) - height))
    return "".join(steps)


def path_to_pattern(path: str) -> Pattern:
    """Inverse of pattern_to_path: heights of the east steps, plus one."""
    values: List[int] = []
    height = 0
    for step in path:
        if step == "N":
            height += 1
        else:
            values.append(height + 1)
    return Pattern(tuple(values))


def nondecreasing_pattern_path_bijection(
    n: int, cap: Optional[int] = None
) -> VerificationRecord:
    """
    Check the nondecreasing-pattern / non-crossing-path correspondence.

    Each nondecreasing valid pattern must map to a distinct non-crossing path
    to (n-1, n-1), map back to itself, and the two sets must have the same
    size catalan(n).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    _path_cap(n, cap)

    seen = set()
    round_trip = True
    for pattern in iter_nondecreasing_patterns(n):
        path = pattern_to_path(pattern)
        if not stays_below_diagonal(path) or path_to_pattern(path) != pattern:
            round_trip = False
        seen.add(path)

    paths = sum(1 for _ in iter_noncrossing_paths(n - 1))
    expected = catalan(n)
    return VerificationRecord(
        name="pattern_path_bijection",
        n=n,
        passed=round_trip and len(seen) == paths == expected,
        expected=expected,
        observed=len(seen),
        details={"round_trip": round_trip, "paths": paths},
    )
