"""
Descent Counting

P(n, r), the number of primitive n-arrays with r-1 blocks, equals the number
of valid patterns of length n-1 with exactly n-r descents. The dynamic
program walks positions j = 1..n-1 with state (last value v, descents d);
appending w adds a descent iff w < v. Prefix sums over v make each
transition O(n), for O(n^3) total work.
"""

import logging
from typing import Dict, List

from combinatorics.signatures import count_arrays, iter_signatures

logger = logging.getLogger("binrec.combinatorics")


def _descent_table(n: int) -> List[int]:
    """counts[d] = number of valid patterns of length n-1 with d descents."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n == 1:
        return [1]

    # dp[v][d], v = 1..j
    dp: List[List[int]] = [[0], [1]]
    for j in range(2, n):
        width = j
        prefix = [[0] * width for _ in range(j + 1)]
        for v in range(1, j):
            row = dp[v]
            for d in range(width):
                below = prefix[v - 1][d]
                prefix[v][d] = below + (row[d] if d < len(row) else 0)
        total = prefix[j - 1]

        new_dp: List[List[int]] = [[0] * width]
        for w in range(1, j + 1):
            upto = prefix[min(w, j - 1)]
            row = [0] * width
            for d in range(width):
                row[d] += upto[d]
                if d >= 1:
                    row[d] += total[d - 1] - upto[d - 1]
            new_dp.append(row)
        dp = new_dp

    counts = [0] * (n - 1)
    for v in range(1, n):
        for d, c in enumerate(dp[v]):
            counts[d] += c
    return counts


def primitive_counts(n: int) -> Dict[int, int]:
    """
    {r: P(n, r)} for every r with a nonzero count, from one DP pass.

    Example:
        primitive_counts(6) -> {4: 8, 5: 70, 6: 42}
    """
    counts = _descent_table(n)
    logger.debug(f"descent DP n={n}")
    return {n - d: c for d, c in enumerate(counts) if c}


def primitive_count_dp(n: int, r: int) -> int:
    """Patterns of length n-1 with exactly n-r descents; 0 outside the range."""
    d = n - r
    counts = _descent_table(n)
    if not 0 <= d < len(counts):
        return 0
    return counts[d]


def arrays_by_weight(n: int) -> Dict[int, int]:
    """
    xi_r from the signatures: sum of count_arrays over signatures with r-1 blocks.
    """
    weights: Dict[int, int] = {}
    for signature in iter_signatures(n):
        r = signature.weight_exponent
        weights[r] = weights.get(r, 0) + count_arrays(signature)
    return dict(sorted(weights.items()))
