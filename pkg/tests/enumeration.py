"""Exhaustive enumeration oracles, independent of everything in the package.

These are the provenance for every hand-frozen expected value in the test
suite.  They enumerate actual combinatorial objects (or scan actual integers)
and are only meant for small n: keep bounds at 30 or below where they back
DP tables, since enumeration is exponential.
"""

from __future__ import annotations

from typing import Iterator


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as non-increasing part tuples."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def count_partitions(n: int) -> int:
    return sum(1 for _ in partitions(n))


def count_overpartitions(n: int) -> int:
    """Each distinct part size independently may or may not overline its
    first occurrence, so a partition with d distinct sizes yields 2^d
    overpartitions."""
    total = 0
    for p in partitions(n):
        total += 1 << len(set(p))
    return total


def count_a_mod6(n: int) -> int:
    """Partitions of n with no part congruent to 3 mod 6."""
    return sum(1 for p in partitions(n) if all(part % 6 != 3 for part in p))


def count_a_oddtwice(n: int) -> int:
    """Partitions of n whose odd parts appear at most twice each."""
    count = 0
    for p in partitions(n):
        if all(p.count(part) <= 2 for part in set(p) if part % 2 == 1):
            count += 1
    return count


def count_g(n: int) -> int:
    """1 iff n = 3k^2 + 2k for some integer k, by scanning k directly."""
    k = 0
    while 3 * k * k - 2 * abs(k) <= n:
        if 3 * k * k + 2 * k == n or 3 * k * k - 2 * k == n:
            return 1
        k += 1
    return 0


def naive_euler_product(r: int, order: int) -> list[int]:
    """Coefficients of prod_{i>=1} (1 - q^{ri}) truncated to the order,
    multiplied out factor by factor with plain list convolution."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    step = r
    while step <= order:
        # multiply by (1 - q^step) in place, descending
        for idx in range(order, step - 1, -1):
            coeffs[idx] -= coeffs[idx - step]
        step += r
    return coeffs
