"""Registry of corpus properties evaluated by the sweep.

Each property takes one enumerated semigroup (with its extracted abstract
system) and returns a verdict. Properties carry the size limit beyond which
they are skipped, and whether they apply to the invertible corpus only.

Usage::

    from transalg.sweep.properties import list_properties

    for p in list_properties(tag="closure"):
        print(p.name, p.description)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from transalg.algebra.base import AbstractSystem
from transalg.algebra.checks import (
    battery,
    check_dt1,
    check_dt2,
    check_dt3,
    check_dt4,
    check_f_tr14,
    check_theorem3,
    check_theorem7,
    scan_left_ideal,
)
from transalg.closure import (
    F1,
    Fn_unrolled,
    Reading,
    check_chi0_minimality,
    check_prop7,
    check_schemas,
    chi0,
    closure_chain,
    closure_oracle,
    f_closure,
    is_f_closed,
    is_f_closed_prop6,
    left_translation_witness,
)
from transalg.core.bitset import full_mask, members
from transalg.core.errors import UsageError
from transalg.core.logging_utils import get_logger
from transalg.maps.pfun import compose, domain, rel_chi, rel_delta
from transalg.maps.tsemi import TransSemigroup, generate
from transalg.repsearch import Found, Representation, find_representation, verify_representation

logger = get_logger(__name__)


@dataclass(frozen=True)
class SweepLimits:
    """Largest |G| at which the expensive properties are still evaluated."""

    minimality_max_size: int = 4
    closure_max_size: int = 5
    prop5_max_size: int = 5
    unrolled_n1_max_size: int = 4
    unrolled_n2_max_size: int = 3
    seed: int = 0


@dataclass(frozen=True)
class SweepItem:
    index: int
    phi: TransSemigroup
    system: AbstractSystem
    invertible: bool
    limits: SweepLimits = SweepLimits()

    @property
    def size(self) -> int:
        return self.system.size


@dataclass
class PropertySpec:
    """One corpus-wide property."""

    name: str
    description: str
    check: Callable[[SweepItem], bool]
    size_limit: Optional[Callable[[SweepLimits], int]] = None
    invertible_only: bool = False
    tags: list[str] = field(default_factory=list)

    def applies(self, item: SweepItem) -> bool:
        if self.invertible_only and not item.invertible:
            return False
        if self.size_limit is not None and item.size > self.size_limit(item.limits):
            return False
        return True


PROPERTIES: dict[str, PropertySpec] = {}


def _reg(spec: PropertySpec) -> None:
    PROPERTIES[spec.name] = spec


def _subsets(m: int) -> range:
    return range(1 << m)


# -- Concrete maps ----------------------------------------------------------

def _prop1_pairs(item: SweepItem) -> bool:
    return all(rel_delta(f, g) == rel_chi(f, compose(g, f)) for f in item.phi for g in item.phi)


def _generate_idempotent(item: SweepItem) -> bool:
    phi = item.phi
    return generate(phi.base_size, list(phi.elements), invertible_only=phi.invertible_only).elements == phi.elements


def _prop5_domains(item: SweepItem) -> bool:
    elems, m = item.phi.elements, item.size
    full = full_mask(item.phi.base_size)
    for h in _subsets(m):
        if not h:
            continue
        common = full
        for i in members(h):
            common &= domain(elems[i])
        for i in f_closure(item.system, members(h)):
            if common & ~domain(elems[i]):
                return False
    return True


_reg(PropertySpec(
    name="prop1.delta-chi", description="f ⊢ g iff f ⊏ g∘f on every pair of Φ",
    check=_prop1_pairs, tags=["maps"],
))
_reg(PropertySpec(
    name="generate.idempotent", description="generate over the elements of Φ returns Φ",
    check=_generate_idempotent, tags=["maps"],
))
_reg(PropertySpec(
    name="prop5.domain-intersection", description="⋂ pr₁H ⊆ pr₁φ for every φ ∈ f(H)",
    check=_prop5_domains, size_limit=lambda lim: lim.prop5_max_size, tags=["maps", "closure"],
))

# -- Abstract identities ----------------------------------------------------

_reg(PropertySpec(
    name="dt-1", description="x(y⋏z) = xy⋏xz",
    check=lambda it: check_dt1(it.system).passed, tags=["identities"],
))
_reg(PropertySpec(
    name="dt-2", description="(x⋏y⋏z)u⋏(y⋏z)v = (x⋏y)u⋏(y⋏z)v over G¹",
    check=lambda it: check_dt2(it.system).passed, tags=["identities"],
))
_reg(PropertySpec(
    name="dt-3", description="(x⋏y)z = xz⋏yz",
    check=lambda it: check_dt3(it.system).passed, invertible_only=True, tags=["identities", "invertible"],
))
_reg(PropertySpec(
    name="dt-4", description="xv⋏uv⋏uy⋏xy = xv⋏uv⋏uy over G¹",
    check=lambda it: check_dt4(it.system).passed, invertible_only=True, tags=["identities", "invertible"],
))
_reg(PropertySpec(
    name="theorem3", description="χ_Φ is a left regular right negative quasi-order containing ζ, f-tr11..13",
    check=lambda it: check_theorem3(it.system).passed, tags=["theorems"],
))
_reg(PropertySpec(
    name="f-tr14", description="x ⊢ y iff x ⊏ xy",
    check=lambda it: check_f_tr14(it.system).passed, tags=["theorems"],
))
_reg(PropertySpec(
    name="theorem7", description="δ left-ideal and f-29..f-32 against χ₀",
    check=lambda it: check_theorem7(it.system, invertible=it.invertible).passed, tags=["theorems"],
))
_reg(PropertySpec(
    name="prop2.delta-left-ideal", description="δ_Φ is a left-ideal relation",
    check=lambda it: scan_left_ideal(it.system.mul, it.system.delta.rows) is None, tags=["theorems"],
))

# -- Closure ----------------------------------------------------------------

def _prop6_agreement(item: SweepItem) -> bool:
    s = item.system
    return all(is_f_closed(s, members(h)) == is_f_closed_prop6(s, members(h)) for h in _subsets(s.size))


def _closure_oracle(item: SweepItem) -> bool:
    s = item.system
    return all(f_closure(s, members(h)) == closure_oracle(s, members(h)) for h in _subsets(s.size))


def _closure_chain(item: SweepItem) -> bool:
    s = item.system
    for h in _subsets(s.size):
        chain = closure_chain(s, members(h))
        if any(not a <= b for a, b in zip(chain, chain[1:])):
            return False
        fixpoint = chain[-1]
        if F1(s, fixpoint) != fixpoint or not is_f_closed(s, fixpoint):
            return False
    return True


_reg(PropertySpec(
    name="prop6.agreement", description="definition and four-condition f-closedness tests agree",
    check=_prop6_agreement, size_limit=lambda lim: lim.closure_max_size, tags=["closure"],
))
_reg(PropertySpec(
    name="closure.oracle", description="f-closure equals the four-rule saturation",
    check=_closure_oracle, size_limit=lambda lim: lim.closure_max_size, tags=["closure"],
))
_reg(PropertySpec(
    name="closure.chain", description="F1 chain is monotone and its fixpoint is f-closed with F1(H) = H",
    check=_closure_chain, size_limit=lambda lim: lim.closure_max_size, tags=["closure"],
))
_reg(PropertySpec(
    name="closure.left-translation", description="z·f(H) ⊆ f(zH)",
    check=lambda it: left_translation_witness(it.system) is None,
    size_limit=lambda lim: lim.closure_max_size, tags=["closure"],
))
_reg(PropertySpec(
    name="chi0-in-chi", description="χ₀ ⊆ χ_Φ",
    check=lambda it: chi0(it.system).issubset(it.system.chi), tags=["chi0"],
))
_reg(PropertySpec(
    name="prop7", description="χ₀ is a left regular right negative quasi-order with f-27 and f-28",
    check=lambda it: check_prop7(it.system, chi0(it.system)).passed, tags=["chi0"],
))
_reg(PropertySpec(
    name="chi0-minimality", description="χ₀ lies inside every relation passing the χ₀ conditions",
    check=lambda it: check_chi0_minimality(it.system, max_size=it.limits.minimality_max_size).passed,
    size_limit=lambda lim: lim.minimality_max_size, tags=["chi0"],
))

# -- Unrolled schema --------------------------------------------------------

def _unrolled_agrees(item: SweepItem, n: int, sets: list[int]) -> bool:
    s = item.system
    ok = True
    for h in sets:
        level = members(h)
        for _ in range(n):
            level = tuple(F1(s, level))
        iterated = set(level)
        for z in range(s.size):
            indexed = Fn_unrolled(s, z, members(h), n)
            if indexed != (z in iterated):
                ok = False
            literal = Fn_unrolled(s, z, members(h), n, reading=Reading.LITERAL)
            if literal != indexed:
                logger.warning(
                    "Unrolled readings disagree on system %d: n=%d z=%d H=%s indexed=%s literal=%s",
                    item.index, n, z, list(members(h)), indexed, literal,
                )
    return ok


def _singletons(m: int) -> list[int]:
    return [1 << x for x in range(m)]


def _doubletons(m: int) -> list[int]:
    return [(1 << x) | (1 << y) for x in range(m) for y in range(x + 1, m)]


_reg(PropertySpec(
    name="unrolled.n1", description="schema for n = 1 matches F1 on singleton and doubleton H",
    check=lambda it: _unrolled_agrees(it, 1, _singletons(it.size) + _doubletons(it.size)),
    size_limit=lambda lim: lim.unrolled_n1_max_size, tags=["unrolled"],
))
_reg(PropertySpec(
    name="unrolled.n2", description="schema for n = 2 matches F1∘F1 on singleton H",
    check=lambda it: _unrolled_agrees(it, 2, _singletons(it.size)),
    size_limit=lambda lim: lim.unrolled_n2_max_size, tags=["unrolled"],
))
_reg(PropertySpec(
    name="schemas", description="A_1, A_2, B_1, B_2 hold",
    check=lambda it: check_schemas(it.system).passed,
    size_limit=lambda lim: lim.unrolled_n2_max_size, tags=["unrolled"],
))

# -- Representations --------------------------------------------------------

def _round_trip(item: SweepItem) -> bool:
    outcome = find_representation(item.system, item.phi.base_size, invertible=item.invertible)
    return isinstance(outcome, Found) and verify_representation(item.system, outcome.representation).passed


def _identity_representation(item: SweepItem) -> bool:
    rep = Representation(item.phi.base_size, item.phi.elements)
    return verify_representation(item.system, rep).passed


def _relabel_invariance(item: SweepItem) -> bool:
    rng = np.random.default_rng(item.limits.seed + item.index)
    perm = [int(p) for p in rng.permutation(item.size)]
    before = battery(item.system, 7, invertible=item.invertible)
    after = battery(item.system.relabel(perm), 7, invertible=item.invertible)
    return [r.passed for r in before] == [r.passed for r in after]


_reg(PropertySpec(
    name="representation.identity", description="Φ itself verifies as a representation of its extraction",
    check=_identity_representation, tags=["representation"],
))
_reg(PropertySpec(
    name="representation.round-trip", description="find_representation up to the corpus base returns a verified Found",
    check=_round_trip, tags=["representation"],
))
_reg(PropertySpec(
    name="relabel-invariance", description="Theorem 7 verdicts survive a random renaming of elements",
    check=_relabel_invariance, tags=["theorems"],
))


# -- Public API -------------------------------------------------------------

def list_properties(tag: Optional[str] = None) -> list[PropertySpec]:
    """List registered properties in evaluation order, optionally filtered by tag."""
    if tag is None:
        return list(PROPERTIES.values())
    return [p for p in PROPERTIES.values() if tag in p.tags]


def get_property(name: str) -> PropertySpec:
    if name not in PROPERTIES:
        available = ", ".join(sorted(PROPERTIES.keys()))
        raise UsageError(f"Unknown property '{name}'. Available: {available}")
    return PROPERTIES[name]
