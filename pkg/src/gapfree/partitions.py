"""Brute-force partition oracles, independent of all series machinery.

Partitions are plain tuples of parts in nonincreasing order.  Enumeration
is in reverse-lexicographic order on part sequences, starting at (n) and
ending at (1, 1, ..., 1); that order is frozen so golden tests stay stable.

Enumeration caps guard against accidental exponential blowups.  They are
per-call configuration with module defaults, not hard constants.
"""

from __future__ import annotations

from typing import Iterator

DEFAULT_CAP = 60
DEFAULT_DISTINCT_CAP = 120

Partition = tuple[int, ...]


def _check_n(n: int, cap: int, kind: str) -> None:
    if n < 1:
        raise ValueError("n must be >= 1 (the weight-0 partition is excluded)")
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the {kind} enumeration cap {cap}; "
            "use the generating-function route for large n"
        )


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[Partition]:
    """All partitions of n, reverse-lexicographically, each exactly once.

    Iterative ZS1-style generation: amortized O(1) per partition, no
    recursion.  Yields p(n) tuples.
    """
    _check_n(n, cap, "all-partitions")
    x = [1] * n
    x[0] = n
    m = 1  # number of parts in the current partition
    h = 1  # number of leading parts larger than 1
    yield (n,)
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                x[h] = r
                h += 1
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    x[h] = t
                    h += 1
        yield tuple(x[:m])


def distinct_partitions(n: int, cap: int = DEFAULT_DISTINCT_CAP) -> Iterator[Partition]:
    """Partitions of n into distinct parts, reverse-lexicographically."""
    _check_n(n, cap, "distinct-partitions")
    yield from _distinct(n, n)


def _distinct(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _distinct(n - first, first - 1):
            yield (first,) + rest


def partition_count(n: int, _memo: dict = {0: 1}) -> int:
    """p(n) by Euler's pentagonal-number recurrence.

    Independent of the enumerators above; used to cross-check their counts.
    """
    if n < 0:
        return 0
    if n in _memo:
        return _memo[n]
    for m in range(max(_memo) + 1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = m - k * (3 * k - 1) // 2
            g2 = m - k * (3 * k + 1) // 2
            if g1 < 0 and g2 < 0:
                break
            term = (_memo[g1] if g1 >= 0 else 0) + (_memo[g2] if g2 >= 0 else 0)
            total += term if k % 2 else -term
            k += 1
        _memo[m] = total
    return _memo[n]


# -- statistics ------------------------------------------------------------


def weight(p: Partition) -> int:
    return sum(p)


def smallest(p: Partition) -> int:
    return p[-1]


def num_parts(p: Partition) -> int:
    return len(p)


def is_distinct(p: Partition) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def is_gap_free(p: Partition) -> bool:
    """Consecutive parts differ by at most 1; single parts qualify."""
    return all(p[i] - p[i + 1] <= 1 for i in range(len(p) - 1))


def only_largest_repeats(p: Partition) -> bool:
    """True iff every repeated value is the maximum.

    Parts below p_1 must be strictly decreasing; the maximum itself may
    occur with any multiplicity.  These are exactly the conjugates of the
    gap-free partitions.
    """
    return all(p[i] > p[i + 1] or p[i] == p[0] for i in range(len(p) - 1))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers diagram; an involution.

    Part j of the result counts the parts of p that are >= j.
    """
    if not p:
        raise ValueError("empty partition has no conjugate here")
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


# -- reference sequences ----------------------------------------------------


def a_direct(n: int, cap: int = DEFAULT_CAP) -> int:
    """Number of gap-free partitions of n, by exhaustive enumeration."""
    _check_n(n, cap, "all-partitions")
    return sum(1 for p in enumerate_partitions(n, cap) if is_gap_free(p))


def b_direct(n: int, cap: int = DEFAULT_DISTINCT_CAP) -> int:
    """Sum of smallest parts over distinct partitions of n with an odd
    number of parts.  Enumerates distinct partitions only."""
    _check_n(n, cap, "distinct-partitions")
    return sum(p[-1] for p in distinct_partitions(n, cap) if len(p) % 2 == 1)
