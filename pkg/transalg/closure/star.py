"""G* = G ∪ {e}: the adjoined element with ee = e, ex = xe = x, e ≤ e, e ⊢ e and x ⊢ e.

Indices 0..m-1 are the elements of G and index m is e. No other order or
⊢ facts involving e are granted: e ≤ x and e ⊢ x are false for x ∈ G.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from transalg.algebra.base import AbstractSystem, StarElement
from transalg.algebra.checks import star_table, zeta_of
from transalg.core.errors import UsageError


@dataclass(frozen=True)
class StarExtension:
    """Tables of ·, ≤ and ⊢ over G*, rows as int bitmasks for ≤ and ⊢."""

    size: int
    mul: tuple[tuple[int, ...], ...]
    leq: tuple[int, ...]
    delta: tuple[int, ...]

    @property
    def e(self) -> int:
        return self.size

    @property
    def star_range(self) -> range:
        return range(self.size + 1)

    def index(self, a: StarElement) -> int:
        if a.index is None:
            return self.size
        if a.index >= self.size:
            raise UsageError(f"element {a.index} is outside 0..{self.size - 1}")
        return a.index

    def element(self, i: int) -> StarElement:
        return StarElement(None if i == self.size else i)


@lru_cache(maxsize=256)
def star_extension(system: AbstractSystem) -> StarExtension:
    m = system.size
    mul = tuple(tuple(row) for row in star_table(system.mul))
    zeta = zeta_of(system.meet).rows
    e_bit = 1 << m
    leq = tuple(zeta) + (e_bit,)
    # x ⊢ e for every x, e ⊢ e, and e ⊢ x never for x ∈ G
    delta = tuple(r | e_bit for r in system.delta.rows) + (e_bit,)
    return StarExtension(m, mul, leq, delta)


def star_mul(system: AbstractSystem, a: StarElement, b: StarElement) -> StarElement:
    ext = star_extension(system)
    return ext.element(ext.mul[ext.index(a)][ext.index(b)])


def star_leq(system: AbstractSystem, a: StarElement, b: StarElement) -> bool:
    ext = star_extension(system)
    return (ext.leq[ext.index(a)] >> ext.index(b)) & 1 == 1


def star_delta(system: AbstractSystem, a: StarElement, b: StarElement) -> bool:
    ext = star_extension(system)
    return (ext.delta[ext.index(a)] >> ext.index(b)) & 1 == 1


def boxdot_leq(system: AbstractSystem, x: StarElement, y: StarElement, z: StarElement) -> bool:
    """x ⊡ y ≤ z, i.e. x ⊢ y and xy ≤ z."""
    return star_delta(system, x, y) and star_leq(system, star_mul(system, x, y), z)
