"""χ₀: (g1, g2) ∈ χ₀ iff g2 lies in the f-closure of {g1}.

check_prop7 and the exhaustive minimality check share the same scans, so
"passes" means the same thing in both.
"""

from __future__ import annotations

from typing import Callable, Optional

from transalg.algebra.base import AbstractSystem, CheckReport, Relation, Witness
from transalg.algebra.checks import (
    require_valid,
    scan_contains,
    scan_f_tr13,
    scan_left_regular,
    scan_quasi_order,
    scan_right_negative,
    zeta_of,
)
from transalg.closure.fclosure import f_closure_mask
from transalg.closure.star import star_extension
from transalg.core.bitset import full_mask, members
from transalg.core.errors import UsageError
from transalg.core.logging_utils import get_logger

logger = get_logger(__name__)

Scan = Callable[[], Optional[Witness]]


def chi0(system: AbstractSystem) -> Relation:
    require_valid(system, "chi0")
    return Relation(system.size, tuple(f_closure_mask(system, 1 << g) for g in range(system.size)))


def _required_pairs(system: AbstractSystem) -> tuple[int, ...]:
    """Rows every passing χ must contain: ζ plus g1 ⊏ g1g2 whenever g1 ⊢ g2."""
    rows = list(zeta_of(system.meet).rows)
    for g1 in range(system.size):
        for g2 in members(system.delta.rows[g1]):
            rows[g1] |= 1 << system.mul[g1][g2]
    return tuple(rows)


def _scan_f27(system: AbstractSystem, rows: tuple[int, ...]) -> Optional[Witness]:
    mul, delta = system.mul, system.delta.rows
    for g1 in range(system.size):
        for g2 in members(delta[g1]):
            if not (rows[g1] >> mul[g1][g2]) & 1:
                return (g1, g2)
    return None


def _prop7_scans(system: AbstractSystem, rows: tuple[int, ...]) -> list[tuple[str, Scan]]:
    star = [list(r) for r in star_extension(system).mul]
    mul, meet = system.mul, system.meet
    return [
        ("quasi-order", lambda: scan_quasi_order(rows)),
        ("left-regular", lambda: scan_left_regular(mul, rows)),
        ("right-negative", lambda: scan_right_negative(mul, rows)),
        ("zeta-in-chi", lambda: scan_contains(zeta_of(meet).rows, rows)),
        ("f-27", lambda: _scan_f27(system, rows)),
        ("f-28", lambda: scan_f_tr13(star, meet, rows)),
    ]


def check_prop7(system: AbstractSystem, chi: Relation) -> CheckReport:
    """χ is a left regular, right negative quasi-order containing ζ that satisfies f-27 and f-28."""
    require_valid(system, "check_prop7")
    if chi.size != system.size:
        raise UsageError(f"relation size {chi.size} does not match system size {system.size}")
    return CheckReport.of(*((cid, scan()) for cid, scan in _prop7_scans(system, chi.rows)))


def _passes_prop7(system: AbstractSystem, rows: tuple[int, ...]) -> bool:
    return all(scan() is None for _, scan in _prop7_scans(system, rows))


def check_chi0_minimality(
    system: AbstractSystem,
    candidate: Optional[Relation] = None,
    max_size: int = 4,
) -> CheckReport:
    """χ₀ (or `candidate`) is contained in every relation passing check_prop7.

    Relations are enumerated as flat bitmasks (pair (x, y) at bit x*m + y) in
    increasing order, restricted to supersets of the pairs every passing
    relation must hold. A failure reports the first passing relation that
    misses a pair of the candidate, as its flat bitmask.
    """
    require_valid(system, "check_chi0_minimality")
    m = system.size
    if m > max_size:
        raise UsageError(f"minimality check is limited to |G| <= {max_size} (2^(m*m) relations), got {m}")
    target = candidate if candidate is not None else chi0(system)
    if target.size != m:
        raise UsageError(f"relation size {target.size} does not match system size {m}")
    target_bits = target.to_int()

    required = Relation(m, _required_pairs(system)).to_int()
    free = full_mask(m * m) & ~required
    s = 0
    checked = 0
    while True:
        bits = required | s
        rows = Relation.from_int(m, bits).rows
        if _passes_prop7(system, rows):
            checked += 1
            if target_bits & ~bits:
                return CheckReport.of(("chi0-minimality", (bits,)))
        if s == free:
            break
        s = (s - free) & free
    logger.debug("chi0 minimality: %d passing relations contain the candidate", checked)
    return CheckReport.of(("chi0-minimality", None))
