"""∩-semigroups of partial transformations: generation, enumeration, extraction."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from transalg.algebra.base import AbstractSystem, Relation
from transalg.core.errors import IntegrityError, UsageError
from transalg.core.logging_utils import get_logger
from transalg.maps.pfun import (
    PartialMap,
    all_maps,
    compose,
    format_map,
    injective_maps,
    is_invertible,
    meet,
    rel_chi,
    rel_delta,
)

logger = get_logger(__name__)

# full powerset enumeration up to this base; larger bases enumerate generator sets
POWERSET_MAX_BASE = 2
GENERATOR_SET_MAX_BASE = 3


@dataclass(frozen=True)
class TransSemigroup:
    """A finite set Φ of partial maps closed under composition (and meet if with_meet).

    Elements are duplicate-free and sorted in the canonical table order.
    """

    base_size: int
    elements: tuple[PartialMap, ...]
    with_meet: bool = True
    invertible_only: bool = False

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(self.elements)))
        if not elems:
            raise UsageError("a transformation semigroup needs at least one map")
        for f in elems:
            if f.base_size != self.base_size:
                raise UsageError(f"map {format_map(f)} has base size {f.base_size}, expected {self.base_size}")
            if self.invertible_only and not is_invertible(f):
                raise UsageError(f"map {format_map(f)} is not injective")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PartialMap]:
        return iter(self.elements)

    def __getitem__(self, idx: int) -> PartialMap:
        return self.elements[idx]

    def index(self, f: PartialMap) -> int:
        return self.elements.index(f)

    def literals(self) -> list[str]:
        return [format_map(f) for f in self.elements]


def generate(
    base_size: int,
    generators: Sequence[PartialMap],
    with_meet: bool = True,
    invertible_only: bool = False,
) -> TransSemigroup:
    """Smallest set containing `generators` closed under ∘ (and ∩ if with_meet).

    Worklist fixpoint: every newly found map is combined with every known map
    in both orders. Terminates since there are (n+1)^n maps on a base of n.
    """
    if not generators:
        raise UsageError("at least one generator is required")
    for g in generators:
        if g.base_size != base_size:
            raise UsageError(f"generator {format_map(g)} has base size {g.base_size}, expected {base_size}")

    known: set[PartialMap] = set()
    order: list[PartialMap] = []
    queue: deque[PartialMap] = deque()
    for g in generators:
        if g not in known:
            known.add(g)
            order.append(g)
            queue.append(g)

    while queue:
        a = queue.popleft()
        for b in list(order):
            products = [compose(a, b), compose(b, a)]
            if with_meet:
                products.append(meet(a, b))
            for c in products:
                if c not in known:
                    known.add(c)
                    order.append(c)
                    queue.append(c)

    return TransSemigroup(base_size, tuple(known), with_meet=with_meet, invertible_only=invertible_only)


def extract_abstract(phi: TransSemigroup, name: str | None = None) -> AbstractSystem:
    """Abstract system of Φ: mul(i, j) = index of elem(j) ∘ elem(i) ("i first, then j")."""
    if not phi.with_meet:
        raise UsageError("extraction needs a ∩-closed semigroup (with_meet=True)")
    elems = phi.elements
    index = {f: i for i, f in enumerate(elems)}
    m = len(elems)
    mul = [[0] * m for _ in range(m)]
    mt = [[0] * m for _ in range(m)]
    for i, f in enumerate(elems):
        for j, g in enumerate(elems):
            prod = compose(g, f)
            if prod not in index:
                raise IntegrityError(f"{format_map(g)} ∘ {format_map(f)} = {format_map(prod)} is not in Φ", (i, j))
            mul[i][j] = index[prod]
            cap = meet(f, g)
            if cap not in index:
                raise IntegrityError(f"{format_map(f)} ∩ {format_map(g)} = {format_map(cap)} is not in Φ", (i, j))
            mt[i][j] = index[cap]
    delta = Relation.from_pairs(m, ((i, j) for i in range(m) for j in range(m) if rel_delta(elems[i], elems[j])))
    chi = Relation.from_pairs(m, ((i, j) for i in range(m) for j in range(m) if rel_chi(elems[i], elems[j])))
    return AbstractSystem(
        size=m,
        mul=tuple(map(tuple, mul)),
        meet=tuple(map(tuple, mt)),
        delta=delta,
        chi=chi,
        name=name or ";".join(phi.literals()),
    )


# ======================================================================
# Corpus enumeration
# ======================================================================

def _canonical(sgs: Iterator[TransSemigroup]) -> list[TransSemigroup]:
    return sorted(sgs, key=lambda s: (len(s), s.elements))


def _closed_subsets(candidates: list[PartialMap], with_meet: bool) -> Iterator[tuple[PartialMap, ...]]:
    k = len(candidates)
    index = {f: i for i, f in enumerate(candidates)}
    # products as bitmasks over candidate indices; a product outside the candidates can never be closed
    outside = 1 << k
    comp = [[0] * k for _ in range(k)]
    cap = [[0] * k for _ in range(k)]
    for i, f in enumerate(candidates):
        for j, g in enumerate(candidates):
            c = compose(g, f)
            comp[i][j] = 1 << index[c] if c in index else outside
            c = meet(f, g)
            cap[i][j] = 1 << index[c] if c in index else outside
    for mask in range(1, 1 << k):
        members = [i for i in range(k) if (mask >> i) & 1]
        closed = True
        for i in members:
            ci, mi = comp[i], cap[i]
            for j in members:
                if ci[j] & ~mask or (with_meet and mi[j] & ~mask):
                    closed = False
                    break
            if not closed:
                break
        if closed:
            yield tuple(candidates[i] for i in members)


def enumerate_all(base_size: int, with_meet: bool = True, invertible_only: bool = False) -> Iterator[TransSemigroup]:
    """Every closed non-empty Φ on the base, once each, in canonical order.

    Bases up to 2 use the full powerset of candidate maps; base 3 enumerates
    the closures of all generator sets of size <= 2.
    """
    if not 1 <= base_size <= GENERATOR_SET_MAX_BASE:
        raise UsageError(f"enumeration supports base sizes 1..{GENERATOR_SET_MAX_BASE}, got {base_size}")
    return iter(_corpus(base_size, with_meet, invertible_only))


def _corpus(base_size: int, with_meet: bool, invertible_only: bool) -> list[TransSemigroup]:
    candidates = list(injective_maps(base_size) if invertible_only else all_maps(base_size))

    if base_size <= POWERSET_MAX_BASE:
        found = (
            TransSemigroup(base_size, elems, with_meet=with_meet, invertible_only=invertible_only)
            for elems in _closed_subsets(candidates, with_meet)
        )
        corpus = _canonical(found)
    else:
        seen: set[tuple[PartialMap, ...]] = set()
        collected: list[TransSemigroup] = []
        gen_sets = itertools.chain(
            ((f,) for f in candidates),
            itertools.combinations(candidates, 2),
        )
        for gens in gen_sets:
            sg = generate(base_size, list(gens), with_meet=with_meet, invertible_only=invertible_only)
            if sg.elements not in seen:
                seen.add(sg.elements)
                collected.append(sg)
        corpus = _canonical(iter(collected))

    logger.info("Enumerated %d semigroups on base %d (with_meet=%s, invertible_only=%s)",
                len(corpus), base_size, with_meet, invertible_only)
    return corpus
