"""Fixed-width subsets of {0..n-1} stored as int bitmasks."""

from __future__ import annotations

from typing import Iterable


def to_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        if p < 0:
            raise ValueError(f"point must be >= 0, got {p}")
        mask |= 1 << p
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted members of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0

