"""Integer partition utilities.

Partitions of n are tuples of positive ints in weakly decreasing order. The
canonical ordering everywhere in this package is *descending lexicographic*:
(n) first, (1,)*n last. Ranks refer to positions in that order.

The counting table C with C[m, k] = #{partitions of m with all parts <= k}
drives both ranking (partition -> dense index) and unranking; the same table
is handed to the numba kernels so they can bucket partition types into a
dense count array without hashing.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def count_table(nmax: int) -> np.ndarray:
    """(nmax+1) x (nmax+1) int64 table; entry [m, k] counts partitions of m
    into parts of size at most k."""
    c = np.zeros((nmax + 1, nmax + 1), dtype=np.int64)
    c[0, :] = 1
    for m in range(1, nmax + 1):
        for k in range(1, nmax + 1):
            c[m, k] = c[m, k - 1] + (c[m - k, k] if m >= k else 0)
    return c.copy()
    # .copy() so cached array is contiguous and safely shareable


@lru_cache(maxsize=None)
def partitions_desc(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[tuple[int, ...]] = []

    def rec(m: int, bound: int, prefix: tuple[int, ...]) -> None:
        if m == 0:
            out.append(prefix)
            return
        for part in range(min(m, bound), 0, -1):
            rec(m - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def num_partitions(n: int) -> int:
    return int(count_table(n)[n, n]) if n > 0 else 1


def rank_desc(parts: tuple[int, ...]) -> int:
    """Index of `parts` within partitions_desc(sum(parts))."""
    n = sum(parts)
    table = count_table(max(n, 1))
    rank = 0
    m = n
    bound = n
    for part in parts:
        # count partitions of m (parts <= bound) whose first part exceeds `part`
        for t in range(part + 1, min(bound, m) + 1):
            rank += int(table[m - t, t])
        bound = part
        m -= part
    return rank


def unrank_desc(n: int, rank: int) -> tuple[int, ...]:
    """Inverse of rank_desc for partitions of n."""
    table = count_table(max(n, 1))
    parts: list[int] = []
    m = n
    bound = n
    while m > 0:
        for t in range(min(bound, m), 0, -1):
            cnt = int(table[m - t, t])  # partitions with first part exactly t
            if rank < cnt:
                parts.append(t)
                bound = t
                m -= t
                break
            rank -= cnt
        else:
            raise ValueError("rank out of range")
    if rank != 0:
        raise ValueError("rank out of range")
    return tuple(parts)


def mult_factorial(parts: tuple[int, ...]) -> int:
    """Product of factorials of part multiplicities: (2,2,1) -> 2!*1! = 2."""
    out = 1
    run = 1
    for i in range(1, len(parts)):
        if parts[i] == parts[i - 1]:
            run += 1
            out *= run
        else:
            run = 1
    return out


def falling_factorial(r: int, length: int) -> int:
    """r * (r-1) * ... * (r-length+1), exact; 1 when length == 0."""
    out = 1
    for i in range(length):
        out *= r - i
    return out


def partition_of_multiset(sizes) -> tuple[int, ...]:
    """Sort a bag of positive ints into partition form (weakly decreasing)."""
    return tuple(sorted(sizes, reverse=True))
