"""Verify and search for representations of abstract systems by partial maps.

A representation P assigns each element a partial map with
    P(x·y) = P(y) ∘ P(x),  P(x⋏y) = P(x) ∩ P(y),  x ⊢ y ⟺ pr₂P(x) ⊆ pr₁P(y)
and P injective.

The search is a depth-first backtracking over canonical candidate maps, base
sizes 1..max_base, that rejects a partial assignment as soon as a law
instance with all operands assigned fails. An element whose value is already
determined by assigned operands (x·y or x⋏y) is only tried at that value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from transalg.algebra.base import AbstractSystem, CheckReport, Witness
from transalg.algebra.checks import battery, check_f_tr14, check_theorem3
from transalg.core.errors import UsageError
from transalg.core.logging_utils import get_logger
from transalg.core.parallel import ParallelOptions, parallel_map
from transalg.maps.pfun import PartialMap, all_maps, compose, format_map, injective_maps, meet, rel_chi, rel_delta

logger = get_logger(__name__)


class SearchOrder(str, Enum):
    CANONICAL = "canonical"
    CONSTRAINED = "constrained"


# ======================================================================
# Outcomes
# ======================================================================

@dataclass(frozen=True)
class Representation:
    base_size: int
    assignment: tuple[PartialMap, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for f in self.assignment:
            if f.base_size != self.base_size:
                raise UsageError(f"map {format_map(f)} has base size {f.base_size}, expected {self.base_size}")

    def literals(self) -> list[str]:
        return [format_map(f) for f in self.assignment]


@dataclass(frozen=True)
class Found:
    representation: Representation

    def to_text(self) -> str:
        return "\n".join([f"FOUND base={self.representation.base_size}", *self.representation.literals()])


@dataclass(frozen=True)
class NotFoundUpToBound:
    """Inconclusive: no representation on any base up to max_base."""

    max_base: int

    def to_text(self) -> str:
        return f"NOT-FOUND-UP-TO base={self.max_base} (inconclusive)"


@dataclass(frozen=True)
class ConditionsFail:
    report: CheckReport

    def to_text(self) -> str:
        return "CONDITIONS-FAIL\n" + self.report.to_text()


SearchOutcome = Union[Found, NotFoundUpToBound, ConditionsFail]


# ======================================================================
# Verification
# ======================================================================

def _first_pair(m: int, bad) -> Optional[Witness]:
    for x in range(m):
        for y in range(m):
            if bad(x, y):
                return (x, y)
    return None


def verify_representation(system: AbstractSystem, rep: Representation) -> CheckReport:
    m = system.size
    P = rep.assignment
    if len(P) != m:
        raise UsageError(f"assignment has {len(P)} maps, system has {m} elements")
    mul, mt, delta, chi = system.mul, system.meet, system.delta, system.chi

    injective = None
    for x in range(m):
        for y in range(x + 1, m):
            if P[x] == P[y]:
                injective = (x, y)
                break
        if injective:
            break

    records = [
        ("injective", injective),
        ("mul-law", _first_pair(m, lambda x, y: P[mul[x][y]] != compose(P[y], P[x]))),
        ("meet-law", _first_pair(m, lambda x, y: P[mt[x][y]] != meet(P[x], P[y]))),
        ("delta-law", _first_pair(m, lambda x, y: delta.holds(x, y) != rel_delta(P[x], P[y]))),
    ]
    if chi is not None:
        records.append(("chi-law", _first_pair(m, lambda x, y: chi.holds(x, y) != rel_chi(P[x], P[y]))))
    return CheckReport.of(*records)


# ======================================================================
# Search
# ======================================================================

def _element_order(system: AbstractSystem, order: Union[SearchOrder, str]) -> list[int]:
    m = system.size
    try:
        order = SearchOrder(order)
    except ValueError:
        raise UsageError(f"unknown search order {order!r}; use 'canonical' or 'constrained'") from None
    if order is SearchOrder.CANONICAL:
        return list(range(m))
    # elements that occur most often as a product or meet are placed last, so
    # their values are forced by operands already assigned
    hits = [0] * m
    for x in range(m):
        for y in range(m):
            hits[system.mul[x][y]] += 1
            hits[system.meet[x][y]] += 1
    return sorted(range(m), key=lambda k: (hits[k], k))


class _Backtracker:
    def __init__(self, system: AbstractSystem, base: int, candidates: Sequence[PartialMap], elem_order: list[int]):
        self.system = system
        self.base = base
        self.candidates = list(candidates)
        self.allowed = set(self.candidates)
        self.order = elem_order
        self.P: list[Optional[PartialMap]] = [None] * system.size
        self.used: set[PartialMap] = set()

    def _forced(self, k: int) -> Optional[PartialMap]:
        """Value of element k implied by assigned operands, if any."""
        P, mul, mt = self.P, self.system.mul, self.system.meet
        assigned = [x for x in range(self.system.size) if P[x] is not None]
        for x in assigned:
            for y in assigned:
                if mul[x][y] == k:
                    return compose(P[y], P[x])
                if mt[x][y] == k:
                    return meet(P[x], P[y])
        return None

    def _consistent(self, k: int) -> bool:
        P, s = self.P, self.system
        mul, mt, delta, chi = s.mul, s.meet, s.delta, s.chi
        assigned = [x for x in range(s.size) if P[x] is not None]
        pk = P[k]
        for x in assigned:
            px = P[x]
            if delta.holds(k, x) != rel_delta(pk, px) or delta.holds(x, k) != rel_delta(px, pk):
                return False
            if chi is not None and (chi.holds(k, x) != rel_chi(pk, px) or chi.holds(x, k) != rel_chi(px, pk)):
                return False
            for y in assigned:
                if k not in (x, y, mul[x][y], mt[x][y]):
                    continue
                xy = P[mul[x][y]]
                if xy is not None and xy != compose(P[y], px):
                    return False
                xm = P[mt[x][y]]
                if xm is not None and xm != meet(px, P[y]):
                    return False
        return True

    def _options(self, k: int) -> list[PartialMap]:
        forced = self._forced(k)
        if forced is None:
            return self.candidates
        return [forced] if forced in self.allowed else []

    def _assign(self, k: int, f: PartialMap) -> bool:
        if f in self.used:
            return False
        self.P[k] = f
        if self._consistent(k):
            self.used.add(f)
            return True
        self.P[k] = None
        return False

    def _unassign(self, k: int) -> None:
        f = self.P[k]
        self.P[k] = None
        self.used.discard(f)

    def _dfs(self, depth: int) -> bool:
        if depth == len(self.order):
            return True
        k = self.order[depth]
        for f in self._options(k):
            if self._assign(k, f):
                if self._dfs(depth + 1):
                    return True
                self._unassign(k)
        return False

    def run(self, first: Optional[PartialMap] = None) -> Optional[Representation]:
        """Search from scratch, or with the first element fixed to `first`."""
        if first is not None:
            if not self._assign(self.order[0], first):
                return None
            found = self._dfs(1)
        else:
            found = self._dfs(0)
        if not found:
            return None
        return Representation(self.base, tuple(self.P))  # type: ignore[arg-type]


def find_representation(
    system: AbstractSystem,
    max_base: int,
    invertible: bool = False,
    order: Union[SearchOrder, str] = SearchOrder.CANONICAL,
    max_workers: int = 1,
    guard: Optional[int] = None,
) -> SearchOutcome:
    """Gate on the Theorem 7 conditions (plus Theorem 3 and f-tr14 when the
    system carries χ), then search bases 1..max_base.

    With max_workers > 1 each base is split on the candidates of the first
    element and the canonically first branch with a solution wins, so the
    outcome equals the sequential one.
    """
    if max_base < 1:
        raise UsageError(f"max_base must be >= 1, got {max_base}")
    if guard is not None and max_base * system.size > guard:
        raise UsageError(
            f"max_base * |G| = {max_base * system.size} exceeds the search guard {guard}"
        )

    elem_order = _element_order(system, order)
    report = battery(system, 7, invertible=invertible)
    if report.passed and system.chi is not None:
        # χ has to hold as domain inclusion too
        report = report + check_theorem3(system) + check_f_tr14(system)
    if not report.passed:
        return ConditionsFail(report)

    for base in range(1, max_base + 1):
        candidates = list(injective_maps(base) if invertible else all_maps(base))
        logger.info("Searching base %d: %d candidate maps for %d elements", base, len(candidates), system.size)

        if max_workers <= 1:
            rep = _Backtracker(system, base, candidates, elem_order).run()
        else:
            branches = parallel_map(
                lambda f: _Backtracker(system, base, candidates, elem_order).run(first=f),
                candidates,
                ParallelOptions(max_workers=max_workers, desc=f"base {base}"),
            )
            rep = next((r for r in branches if r is not None), None)

        if rep is not None:
            logger.info("Found a representation on base %d", base)
            return Found(rep)
    return NotFoundUpToBound(max_base)
