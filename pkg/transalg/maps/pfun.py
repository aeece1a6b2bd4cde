"""Partial transformations of a finite base set {0..n-1}.

A PartialMap is a value: two maps are equal iff their base sizes and all
table entries agree. Undefined entries hold the UNDEFINED sentinel, which
sorts before every point so the canonical order of tables puts "undefined"
ahead of 0.

Point-sets (domains, images) are int bitmasks over the base set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Final, Iterable, Iterator, Sequence

from transalg.core.bitset import is_subset
from transalg.core.errors import ParseError, UsageError

UNDEFINED: Final = -1


@dataclass(frozen=True, order=True)
class PartialMap:
    """A partial map a -> table[a] on {0..base_size-1}."""

    base_size: int
    table: tuple[int, ...]
    _domain: int = field(default=0, init=False, repr=False, compare=False)
    _image: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        table = tuple(self.table)
        if self.base_size < 1:
            raise UsageError(f"base_size must be positive, got {self.base_size}")
        if len(table) != self.base_size:
            raise UsageError(f"table has {len(table)} entries, expected base_size={self.base_size}")
        dom = img = 0
        for a, b in enumerate(table):
            if b == UNDEFINED:
                continue
            if not 0 <= b < self.base_size:
                raise UsageError(f"entry {b} at point {a} is outside 0..{self.base_size - 1}")
            dom |= 1 << a
            img |= 1 << b
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_domain", dom)
        object.__setattr__(self, "_image", img)

    @classmethod
    def of(cls, table: Sequence[int]) -> "PartialMap":
        return cls(len(table), tuple(table))

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __str__(self) -> str:
        return format_map(self)


def _same_base(*maps: PartialMap) -> int:
    n = maps[0].base_size
    for f in maps[1:]:
        if f.base_size != n:
            raise UsageError(f"base sizes differ: {n} vs {f.base_size}")
    return n


# ======================================================================
# Operations
# ======================================================================

def compose(g: PartialMap, f: PartialMap) -> PartialMap:
    """(g o f)(a) = g(f(a)), defined where both steps are."""
    _same_base(g, f)
    gt = g.table
    return PartialMap(f.base_size, tuple(UNDEFINED if b == UNDEFINED else gt[b] for b in f.table))


def meet(f: PartialMap, g: PartialMap) -> PartialMap:
    """Intersection of graphs: defined where both agree."""
    _same_base(f, g)
    return PartialMap(f.base_size, tuple(x if x == y else UNDEFINED for x, y in zip(f.table, g.table)))


def domain(f: PartialMap) -> int:
    return f._domain


def image(f: PartialMap) -> int:
    return f._image


def rel_zeta(f: PartialMap, g: PartialMap) -> bool:
    """Graph inclusion f ⊆ g."""
    _same_base(f, g)
    return all(x == UNDEFINED or x == y for x, y in zip(f.table, g.table))


def rel_chi(f: PartialMap, g: PartialMap) -> bool:
    """Domain inclusion."""
    _same_base(f, g)
    return is_subset(f._domain, g._domain)


def rel_delta(f: PartialMap, g: PartialMap) -> bool:
    """Image of f inside the domain of g (semiadjacency)."""
    _same_base(f, g)
    return is_subset(f._image, g._domain)


def is_invertible(f: PartialMap) -> bool:
    values = [b for b in f.table if b != UNDEFINED]
    return len(values) == len(set(values))


def identity_on(points: Iterable[int], base_size: int) -> PartialMap:
    """The partial identity fixing exactly `points`."""
    table = [UNDEFINED] * base_size
    for p in points:
        if not 0 <= p < base_size:
            raise UsageError(f"point {p} is outside 0..{base_size - 1}")
        table[p] = p
    return PartialMap(base_size, tuple(table))


# ======================================================================
# Enumeration in canonical order
# ======================================================================

def all_maps(base_size: int) -> Iterator[PartialMap]:
    """All (n+1)^n partial maps, lexicographic on tables, Undefined first."""
    for table in itertools.product(range(UNDEFINED, base_size), repeat=base_size):
        yield PartialMap(base_size, table)


def injective_maps(base_size: int) -> Iterator[PartialMap]:
    return (f for f in all_maps(base_size) if is_invertible(f))


# ======================================================================
# Map literals: "1,-" is (1, undefined) on base 2
# ======================================================================

def parse_map(literal: str, line: int | None = None) -> PartialMap:
    text = literal.strip()
    if not text:
        raise ParseError("empty map literal", line)
    entries = [e.strip() for e in text.split(",")]
    table = []
    for e in entries:
        if e == "-":
            table.append(UNDEFINED)
            continue
        try:
            table.append(int(e))
        except ValueError:
            raise ParseError(f"bad map entry {e!r} in {literal!r}", line) from None
    n = len(table)
    for b in table:
        if b != UNDEFINED and not 0 <= b < n:
            raise ParseError(f"entry {b} out of range for base size {n} in {literal!r}", line)
    return PartialMap(n, tuple(table))


def parse_map_list(text: str) -> list[PartialMap]:
    """Semicolon-separated map literals, e.g. "1,-;0,0"."""
    return [parse_map(part) for part in text.split(";") if part.strip()]


def format_map(f: PartialMap) -> str:
    return ",".join("-" if b == UNDEFINED else str(b) for b in f.table)
