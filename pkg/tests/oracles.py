"""Brute-force reference implementations the fast paths are checked against.

Everything here is deliberately naive: direct definitions, quadratic scans,
full enumerations.  Expected values frozen into the test modules were
computed with these functions.
"""

from __future__ import annotations

import random
from collections.abc import Sequence


def brute_period(s: str) -> int:
    """Smallest p with s[j] == s[j + p] for all valid j, by trying every p."""
    n = len(s)
    for p in range(1, n):
        if all(s[j] == s[j + p] for j in range(n - p)):
            return p
    return n


def rotations(s: str) -> list[str]:
    return [s[k:] + s[:k] for k in range(len(s))]


def brute_least_rotation(s: str) -> tuple[int, str]:
    """Smallest rotation and the first offset attaining it."""
    rots = rotations(s)
    best = min(rots)
    return rots.index(best), best


def brute_is_lyndon(s: str) -> bool:
    return all(s < r for r in rotations(s)[1:])


def periodic_extension(row: str, width: int, shift: int = 0) -> str:
    """The row continued periodically to `width`, rotated left by `shift`."""
    p = brute_period(row)
    return "".join(row[(x + shift) % p] for x in range(width))


def rot_left(rows: Sequence[str], c: int) -> list[str]:
    """Column rotation of the horizontal repetition, re-cut to the original width."""
    return [periodic_extension(row, len(row), c) for row in rows]


def max_overlap(a: Sequence[str], b: Sequence[str], min_width: int) -> int | None:
    """Widest w >= min_width with a's last w columns equal to b's first w."""
    width = len(a[0])
    for w in range(width, min_width - 1, -1):
        if all(ra[width - w :] == rb[:w] for ra, rb in zip(a, b)):
            return w
    return None


def occurs_at(text: Sequence[str], pattern: Sequence[str], row: int, col: int) -> bool:
    if row < 0 or col < 0 or row + len(pattern) > len(text):
        return False
    if col + len(pattern[0]) > len(text[0]):
        return False
    return all(
        text[row + i][col : col + len(pattern[i])] == pattern[i]
        for i in range(len(pattern))
    )


def random_summary_arrays(
    rng: random.Random, max_m: int = 12, max_period: int = 8
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = rng.randint(1, max_m)
    periods = tuple(rng.randint(1, max_period) for _ in range(m))
    lwpos = tuple(rng.randrange(p) for p in periods)
    return periods, lwpos
