"""
Binomial Coefficient Cache

Lazily grown Pascal triangle shared by the recursion, the signature counts
and the basis polynomials x^r (1+x)^k. Rows are only ever appended, under a
lock, so readers never see a half-built row.
"""

import logging
import threading
from typing import List

logger = logging.getLogger("binrec.exact_core")


class BinomialCache:
    """Triangular table rows[n][r] = C(n, r), grown on demand."""

    def __init__(self):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def _grow(self, n: int) -> None:
        with self._lock:
            start = len(self._rows)
            while len(self._rows) <= n:
                prev = self._rows[-1]
                row = [1]
                row.extend(prev[r - 1] + prev[r] for r in range(1, len(prev)))
                row.append(1)
                self._rows.append(row)
            if len(self._rows) > start:
                logger.debug(f"binomial cache grown to n_max={len(self._rows) - 1}")

    def get(self, n: int, r: int) -> int:
        """C(n, r); zero when r < 0 or r > n."""
        if n < 0:
            raise ValueError(f"binomial row index must be non-negative, got {n}")
        if r < 0 or r > n:
            return 0
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][r]

    def row(self, n: int) -> List[int]:
        """A copy of row n."""
        if n >= len(self._rows):
            self._grow(n)
        return list(self._rows[n])


# Global cache instance
binomial_cache = BinomialCache()


def binomial(n: int, r: int) -> int:
    """
    Binomial coefficient C(n, r) from the shared cache.

    Args:
        n: Row index (n >= 0)
        r: Column index; any integer

    Returns:
        C(n, r), or 0 when r < 0 or r > n
    """
    return binomial_cache.get(n, r)
