"""F1, the f-closure fixpoint and the two f-closedness tests.

Sets H ⊆ G are accepted as any iterable of element indices and returned as
frozensets; internally they are int bitmasks. Every operation requires a
valid system (semigroup and semilattice).
"""

from __future__ import annotations

from typing import Iterable, Optional

from transalg.algebra.base import AbstractSystem
from transalg.algebra.checks import require_valid
from transalg.closure.star import StarExtension, star_extension
from transalg.core.bitset import full_mask, members, to_mask
from transalg.core.errors import UsageError
from transalg.core.logging_utils import get_logger

logger = get_logger(__name__)

ElementSet = frozenset[int]


def prepare_extension(system: AbstractSystem, what: str) -> StarExtension:
    require_valid(system, what)
    return star_extension(system)


def as_mask(system: AbstractSystem, H: Iterable[int] | int) -> int:
    if isinstance(H, int):
        mask = H
    else:
        try:
            mask = to_mask(H)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if mask & ~full_mask(system.size):
        raise UsageError(f"set {sorted(members(mask))} has elements outside 0..{system.size - 1}")
    return mask


def _as_set(mask: int) -> ElementSet:
    return frozenset(members(mask))


# ======================================================================
# F1
# ======================================================================

def _lhs_values(system: AbstractSystem, ext: StarExtension, h: int) -> int:
    """{(u⋏v⋏w)x : u⋏v ∈ H, (v⋏w)x ∈ H} with u, v, w ∈ G and x ∈ G*."""
    meet, mul = system.meet, ext.mul
    m = system.size
    out = 0
    for v in range(m):
        us = [u for u in range(m) if (h >> meet[u][v]) & 1]
        if not us:
            continue
        for w in range(m):
            vw = meet[v][w]
            for x in ext.star_range:
                if not (h >> mul[vw][x]) & 1:
                    continue
                for u in us:
                    out |= 1 << mul[meet[meet[u][v]][w]][x]
    return out


def _F1_mask(system: AbstractSystem, ext: StarExtension, h: int) -> int:
    m = system.size
    mul, leq, delta = ext.mul, ext.leq, ext.delta
    lhs = _lhs_values(system, ext, h)

    # a ⊡ y: right factors y with a ⊢ y, products taken in G
    prods = 0
    for a in members(lhs):
        for y in members(delta[a]):
            prods |= 1 << mul[a][y]

    upper = 0
    for b in members(prods):
        upper |= leq[b]
    upper &= full_mask(m)

    out = 0
    for z in range(m):
        if any((upper >> mul[z][t]) & 1 for t in ext.star_range):
            out |= 1 << z
    return out


def F1(system: AbstractSystem, H: Iterable[int]) -> ElementSet:
    """z ∈ F1(H) iff (u⋏v⋏w)x ⊡ y ≤ zt with u⋏v ∈ H and (v⋏w)x ∈ H for some u, v, w ∈ G and x, y, t ∈ G*."""
    ext = prepare_extension(system, "F1")
    return _as_set(_F1_mask(system, ext, as_mask(system, H)))


def _chain(system: AbstractSystem, ext: StarExtension, h: int) -> list[int]:
    chain = [h]
    while True:
        nxt = _F1_mask(system, ext, chain[-1])
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)


def closure_chain(system: AbstractSystem, H: Iterable[int]) -> list[ElementSet]:
    """H = F_0(H) ⊆ F_1(H) ⊆ ... up to and including the fixpoint."""
    ext = prepare_extension(system, "closure_chain")
    return [_as_set(h) for h in _chain(system, ext, as_mask(system, H))]


def f_closure_mask(system: AbstractSystem, h: int) -> int:
    ext = prepare_extension(system, "f_closure")
    chain = _chain(system, ext, h)
    logger.debug("f-closure of %s reached after %d F1 steps", members(h), len(chain) - 1)
    return chain[-1]


def f_closure(system: AbstractSystem, H: Iterable[int]) -> ElementSet:
    return _as_set(f_closure_mask(system, as_mask(system, H)))


# ======================================================================
# f-closedness
# ======================================================================

def is_f_closed(system: AbstractSystem, H: Iterable[int]) -> bool:
    """Direct test of the defining implication; each right-hand value (u⋏v⋏w)x·y is tested once."""
    ext = prepare_extension(system, "is_f_closed")
    h = as_mask(system, H)
    m = system.size
    meet, mul, leq, delta = system.meet, ext.mul, ext.leq, ext.delta
    tested = 0
    for u in range(m):
        for v in range(m):
            if not (h >> meet[u][v]) & 1:
                continue
            for w in range(m):
                uvw = meet[meet[u][v]][w]
                vw = meet[v][w]
                for x in ext.star_range:
                    if not (h >> mul[vw][x]) & 1:
                        continue
                    a = mul[uvw][x]
                    for y in ext.star_range:
                        if not (delta[a] >> y) & 1:
                            continue
                        b = mul[a][y]
                        if (tested >> b) & 1:
                            continue
                        tested |= 1 << b
                        for z in range(m):
                            if (h >> z) & 1:
                                continue
                            for t in ext.star_range:
                                if (leq[b] >> mul[z][t]) & 1:
                                    return False
    return True


def _prop6_rules(system: AbstractSystem, ext: StarExtension, h: int) -> int:
    """Elements the four conditions force into any closed superset of h, in one pass."""
    m = system.size
    meet, mul, leq, delta = system.meet, ext.mul, ext.leq, ext.delta
    add = 0
    for x in range(m):
        for y in range(m):
            # xy ∈ H → x ∈ H
            if (h >> mul[x][y]) & 1:
                add |= 1 << x
    for g1 in members(h):
        # g1 ⊢ g2 → g1g2 ∈ H
        for g2 in members(delta[g1] & full_mask(m)):
            add |= 1 << mul[g1][g2]
        # g1 ≤ g2 → g2 ∈ H
        add |= leq[g1] & full_mask(m)
    for g1 in range(m):
        for g2 in range(m):
            if not (h >> meet[g1][g2]) & 1:
                continue
            for g3 in range(m):
                g23 = meet[g2][g3]
                g123 = meet[meet[g1][g2]][g3]
                for x in ext.star_range:
                    if (h >> mul[g23][x]) & 1:
                        add |= 1 << mul[g123][x]
    return add


def is_f_closed_prop6(system: AbstractSystem, H: Iterable[int]) -> bool:
    """The four-condition characterization: down-closure under products,
    ⊢-products, up-closure in ≤, and the (g1⋏g2⋏g3)x rule with x ∈ G*."""
    ext = prepare_extension(system, "is_f_closed_prop6")
    h = as_mask(system, H)
    return _prop6_rules(system, ext, h) & ~h == 0


def closure_oracle(system: AbstractSystem, H: Iterable[int]) -> ElementSet:
    """Smallest superset of H satisfying the four conditions, by saturation."""
    ext = prepare_extension(system, "closure_oracle")
    h = as_mask(system, H)
    while True:
        nxt = h | _prop6_rules(system, ext, h)
        if nxt == h:
            return _as_set(h)
        h = nxt


def left_translation_witness(system: AbstractSystem) -> Optional[tuple[int, ElementSet]]:
    """First (z, H) with z·f(H) ⊄ f(zH), scanning z then H as increasing bitmasks."""
    ext = prepare_extension(system, "left_translation_witness")
    m = system.size
    mul = ext.mul
    cache: dict[int, int] = {}

    def closed(h: int) -> int:
        if h not in cache:
            cache[h] = _chain(system, ext, h)[-1]
        return cache[h]

    for z in range(m):
        for h in range(1 << m):
            zh = to_mask(mul[z][a] for a in members(h))
            lhs = to_mask(mul[z][a] for a in members(closed(h)))
            if lhs & ~closed(zh):
                return z, _as_set(h)
    return None
