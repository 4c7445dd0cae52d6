"""
Patterns and Arrays

A pattern is the bottom-up number sequence t = (t_1, ..., t_{n-1}) of an
array; it is valid iff 1 <= t_j <= j. An array is a pattern together with a
set of block starts (always containing cell 1) such that the numbers inside
each block strictly descend. Entries never exceed their block position
because t_b <= b at every block start b.

Locations name the boundary between cell j and cell j+1 (1 <= j <= n-2):

- split at j   cells j, j+1 share a block; j+1 becomes a block start
- merge at j   j+1 is a block start and t_{j+1} < t_j; the start is removed
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from config import settings
from combinatorics.signatures import Signature

logger = logging.getLogger("binrec.combinatorics")


class EnumerationCapError(ValueError):
    """Raised when a brute-force enumeration is asked for n above its cap."""


class InvalidOperationError(ValueError):
    """Raised when a split, merge or array construction breaks the array rules."""


def check_cap(n: int, cap: Optional[int], what: str = "enumeration") -> int:
    """Return the effective cap, raising EnumerationCapError when n exceeds it."""
    limit = settings.enumeration_cap if cap is None else cap
    if n > limit:
        raise EnumerationCapError(f"{what} refused for n={n}: cap is {limit} (set BINREC_CAP)")
    return limit


# =============================================================================
# PATTERNS
# =============================================================================

@dataclass(frozen=True)
class Pattern:
    """Valid pattern t_1..t_{n-1} with t_j <= j."""

    t: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(self.t))
        for j, value in enumerate(self.t, start=1):
            if not 1 <= value <= j:
                raise ValueError(f"invalid pattern {self.t}: t_{j} = {value} not in [1, {j}]")

    @property
    def n(self) -> int:
        return len(self.t) + 1

    def value(self, j: int) -> int:
        """t_j, 1-based."""
        return self.t[j - 1]

    def descents(self) -> FrozenSet[int]:
        """Locations j with t_{j+1} < t_j."""
        return frozenset(j for j in range(1, len(self.t)) if self.t[j] < self.t[j - 1])

    def is_nondecreasing(self) -> bool:
        return all(self.t[j] >= self.t[j - 1] for j in range(1, len(self.t)))

    def primitive_starts(self) -> FrozenSet[int]:
        """Block starts of the unique un-mergeable array: 1 and every non-descent."""
        if not self.t:
            return frozenset()
        return frozenset({1} | {j + 1 for j in range(1, len(self.t)) if self.t[j] >= self.t[j - 1]})

    def __str__(self) -> str:
        return "".join(str(v) for v in self.t) if all(v < 10 for v in self.t) else str(self.t)


def descent_count(pattern: Pattern) -> int:
    """
    Number of descents of a pattern.

    Example:
        descent_count(Pattern((1, 2, 1, 4, 2))) -> 2
    """
    return len(pattern.descents())


def enumerate_patterns(n: int, cap: Optional[int] = None) -> Iterator[Pattern]:
    """
    Stream all (n-1)! valid patterns of length n-1 in lexicographic order.

    Args:
        n: Index (n = 1 yields the single empty pattern)
        cap: Largest n allowed; defaults to settings.enumeration_cap

    Raises:
        EnumerationCapError: n above the cap
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    check_cap(n, cap)
    logger.debug(f"enumerating patterns for n={n}")
    for t in itertools.product(*(range(1, j + 1) for j in range(1, n))):
        yield Pattern(t)


def iter_nondecreasing_patterns(n: int) -> Iterator[Pattern]:
    """Nondecreasing valid patterns of length n-1, generated directly."""

    def extend(prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        j = len(prefix) + 1
        if j == n:
            yield tuple(prefix)
            return
        low = prefix[-1] if prefix else 1
        for value in range(low, j + 1):
            prefix.append(value)
            yield from extend(prefix)
            prefix.pop()

    for t in extend([]):
        yield Pattern(t)


# =============================================================================
# ARRAYS
# =============================================================================

@dataclass(frozen=True)
class ArrayObj:
    """A filled tower: pattern plus block starts."""

    pattern: Pattern
    block_starts: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "block_starts", frozenset(self.block_starts))
        reason = _array_violation(self.pattern, self.block_starts)
        if reason:
            raise InvalidOperationError(reason)

    @property
    def n(self) -> int:
        return self.pattern.n

    @property
    def cells(self) -> int:
        return len(self.pattern.t)

    @property
    def block_count(self) -> int:
        return len(self.block_starts)

    @property
    def weight_exponent(self) -> int:
        """r in x^r: number of blocks + 1."""
        return len(self.block_starts) + 1

    def starts(self) -> Tuple[int, ...]:
        return tuple(sorted(self.block_starts))

    def blocks(self) -> List[Tuple[int, ...]]:
        """Cell values per block, bottom block first."""
        bounds = self.starts() + (self.cells + 1,)
        return [
            tuple(self.pattern.t[c - 1] for c in range(bounds[k], bounds[k + 1]))
            for k in range(len(bounds) - 1)
        ]

    def signature(self) -> Signature:
        return Signature(self.n, self.starts())

    def is_canonical(self) -> bool:
        return len(self.block_starts) == self.cells

    def is_primitive(self) -> bool:
        return self.block_starts == self.pattern.primitive_starts()

    def split_locations(self) -> List[int]:
        return [j for j in range(1, self.cells) if j + 1 not in self.block_starts]

    def merge_locations(self) -> List[int]:
        t = self.pattern.t
        return [j for j in range(1, self.cells) if j + 1 in self.block_starts and t[j] < t[j - 1]]

    def to_dict(self) -> dict:
        return {"pattern": list(self.pattern.t), "block_starts": list(self.starts())}


def _array_violation(pattern: Pattern, starts: FrozenSet[int]) -> str:
    cells = len(pattern.t)
    if cells == 0:
        return "" if not starts else "the empty tower has no blocks"
    if 1 not in starts:
        return "cell 1 must start a block"
    if any(not 1 <= s <= cells for s in starts):
        return f"block starts {sorted(starts)} fall outside cells 1..{cells}"
    t = pattern.t
    for j in range(1, cells):
        if j + 1 not in starts and t[j] >= t[j - 1]:
            return f"cells {j} and {j + 1} share a block but {t[j - 1]}, {t[j]} do not descend"
    return ""


def array_for(pattern: Pattern, block_starts: Iterable[int]) -> ArrayObj:
    """Build an array, raising InvalidOperationError when the blocks do not descend."""
    return ArrayObj(pattern, frozenset(block_starts))


def canonical_array(pattern: Pattern) -> ArrayObj:
    """Every cell its own block."""
    return ArrayObj(pattern, frozenset(range(1, len(pattern.t) + 1)))


def primitive_array(pattern: Pattern) -> ArrayObj:
    """The array on which no merge applies."""
    return ArrayObj(pattern, pattern.primitive_starts())


def split(array: ArrayObj, location: int) -> ArrayObj:
    """
    Split the block containing cells location and location+1.

    Raises:
        InvalidOperationError: the two cells are not in the same block
    """
    if not 1 <= location < array.cells:
        raise InvalidOperationError(f"location {location} is not between two cells of the tower")
    if location + 1 in array.block_starts:
        raise InvalidOperationError(
            f"cannot split at {location}: cell {location + 1} already starts a block"
        )
    return ArrayObj(array.pattern, array.block_starts | {location + 1})


def merge(array: ArrayObj, location: int) -> ArrayObj:
    """
    Merge the blocks meeting between cells location and location+1.

    Raises:
        InvalidOperationError: no block boundary there, or the run does not descend across it
    """
    if not 1 <= location < array.cells:
        raise InvalidOperationError(f"location {location} is not between two cells of the tower")
    if location + 1 not in array.block_starts:
        raise InvalidOperationError(
            f"cannot merge at {location}: cells {location} and {location + 1} share a block"
        )
    t = array.pattern.t
    if t[location] >= t[location - 1]:
        raise InvalidOperationError(
            f"cannot merge at {location}: {t[location - 1]}, {t[location]} do not descend"
        )
    return ArrayObj(array.pattern, array.block_starts - {location + 1})


def enumerate_arrays(n: int, cap: Optional[int] = None) -> Iterator[ArrayObj]:
    """Every n-array, grouped by pattern."""
    for pattern in enumerate_patterns(n, cap):
        base = pattern.primitive_starts()
        free = sorted(j + 1 for j in pattern.descents())
        for k in range(len(free) + 1):
            for extra in itertools.combinations(free, k):
                yield ArrayObj(pattern, base | frozenset(extra))
