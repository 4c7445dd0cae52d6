"""
Signatures

An n-signature is a tuple b = (b_1, ..., b_s) with

    b_1 = 1 < b_2 < ... < b_s < n,   b_{j+1} <= 2 b_j   (b_{s+1} := n)

It fixes the tower shape: block j occupies cells b_j .. b_{j+1}-1 and sits
at position b_j. Signatures are counted by the Narayana-Zidek-Capell
numbers.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from exact_core import binomial


@dataclass(frozen=True)
class Signature:
    """Tower shape for n-arrays: block starts b_1 < ... < b_s."""

    n: int
    b: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if not is_signature(self.n, self.b):
            raise ValueError(f"{self.b} is not a {self.n}-signature")

    @property
    def blocks(self) -> int:
        """Number of blocks s."""
        return len(self.b)

    @property
    def weight_exponent(self) -> int:
        """Exponent r of x contributed by each array on this tower."""
        return len(self.b) + 1

    def block_lengths(self) -> List[int]:
        bounds = self.b + (self.n,)
        return [bounds[j + 1] - bounds[j] for j in range(len(self.b))]

    def to_dict(self) -> dict:
        return {"n": self.n, "b": list(self.b)}


def is_signature(n: int, b: Tuple[int, ...]) -> bool:
    """Check the signature conditions; n = 1 has only the empty signature."""
    if n == 1:
        return b == ()
    if n < 1 or not b or b[0] != 1:
        return False
    bounds = tuple(b) + (n,)
    return all(bounds[j] < bounds[j + 1] <= 2 * bounds[j] for j in range(len(b)))


def _extend(n: int, prefix: List[int]) -> Iterator[Tuple[int, ...]]:
    last = prefix[-1]
    if n <= 2 * last:
        yield tuple(prefix)
    for nxt in range(last + 1, min(2 * last, n - 1) + 1):
        prefix.append(nxt)
        yield from _extend(n, prefix)
        prefix.pop()


def iter_signatures(n: int) -> Iterator[Signature]:
    """Signatures of n in lexicographic order (a prefix precedes its extensions)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n == 1:
        yield Signature(1, ())
        return
    for b in _extend(n, [1]):
        yield Signature(n, b)


def enumerate_signatures(n: int) -> List[Signature]:
    """
    All n-signatures in lexicographic order.

    Example:
        [s.b for s in enumerate_signatures(5)] -> [(1, 2, 3), (1, 2, 3, 4), (1, 2, 4)]
    """
    return list(iter_signatures(n))


def count_arrays(signature: Signature) -> int:
    """
    Number of n-arrays on the tower of a signature.

    A block at position b_j of length L holds L distinct numbers from
    1..b_j in descending order, so the count is prod_j C(b_j, b_{j+1} - b_j).

    Example:
        count_arrays(Signature(6, (1, 2, 3, 4))) -> 36
    """
    total = 1
    for start, length in zip(signature.b, signature.block_lengths()):
        total *= binomial(start, length)
    return total
