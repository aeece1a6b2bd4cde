"""Relation-property checkers and the axiom batteries.

Every scan walks its quantified variables in row-major order and returns the
first violating tuple (the witness) or None. Scans work on raw tables and row
bitmasks so the closure module can reuse them on candidate relations.

Product orientation: mul[x][y] is "x first, then y", i.e. the representing
maps satisfy P(xy) = P(y) ∘ P(x).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Optional, Sequence

from transalg.algebra.base import AbstractSystem, CheckReport, Relation, Table, Witness, label
from transalg.core.errors import UsageError

Rows = Sequence[int]


# ======================================================================
# Tables over G* and G¹
# ======================================================================

def star_table(mul: Table) -> list[list[int]]:
    """mul extended by the adjoined element at index m: e·x = x·e = x, e·e = e."""
    m = len(mul)
    ext = [list(row) + [x] for x, row in enumerate(mul)]
    ext.append(list(range(m + 1)))
    return ext


def one_adjoined(system: AbstractSystem) -> tuple[list[list[int]], int]:
    """Table and carrier size of G¹: G itself when (G, ·) has an identity, else G ∪ {e}."""
    if system.identity_element() is not None:
        return [list(row) for row in system.mul], system.size
    return star_table(system.mul), system.size + 1


def _lbl(w: tuple[int, ...], m: int) -> Witness:
    return tuple(label(i, m) for i in w)


def _has(rows: Rows, x: int, y: int) -> bool:
    return (rows[x] >> y) & 1 == 1


# ======================================================================
# Structural scans
# ======================================================================

def scan_associative(t: Table) -> Optional[Witness]:
    rn = range(len(t))
    for x in rn:
        tx = t[x]
        for y in rn:
            txy = t[tx[y]]
            ty = t[y]
            for z in rn:
                if txy[z] != tx[ty[z]]:
                    return (x, y, z)
    return None


def scan_idempotent(t: Table) -> Optional[Witness]:
    for x in range(len(t)):
        if t[x][x] != x:
            return (x,)
    return None


def scan_commutative(t: Table) -> Optional[Witness]:
    rn = range(len(t))
    for x in rn:
        for y in rn:
            if t[x][y] != t[y][x]:
                return (x, y)
    return None


def is_semigroup(system: AbstractSystem) -> CheckReport:
    return CheckReport.of(("semigroup", scan_associative(system.mul)))


def is_semilattice(system: AbstractSystem) -> CheckReport:
    t = system.meet
    return CheckReport.of(
        ("semilattice.idempotent", scan_idempotent(t)),
        ("semilattice.commutative", scan_commutative(t)),
        ("semilattice.associative", scan_associative(t)),
    )


@lru_cache(maxsize=1024)
def structure_valid(system: AbstractSystem) -> bool:
    return is_semigroup(system).passed and is_semilattice(system).passed


def require_valid(system: AbstractSystem, what: str) -> None:
    if not structure_valid(system):
        raise UsageError(f"{what} requires (G,·) to be a semigroup and (G,⋏) a semilattice")


def natural_order(system: AbstractSystem) -> Relation:
    """ζ: x ≤ y iff x ⋏ y = x."""
    if not is_semilattice(system).passed:
        raise UsageError("natural_order requires (G,⋏) to be a semilattice")
    return zeta_of(system.meet)


def zeta_of(meet: Table) -> Relation:
    m = len(meet)
    return Relation(m, tuple(sum(1 << y for y in range(m) if meet[x][y] == x) for x in range(m)))


# ======================================================================
# Relation properties
# ======================================================================

def scan_quasi_order(rows: Rows) -> Optional[Witness]:
    """Reflexivity witness (x,) first, then transitivity witness (x, y, z)."""
    m = len(rows)
    for x in range(m):
        if not _has(rows, x, x):
            return (x,)
    for x in range(m):
        rx = rows[x]
        for y in range(m):
            if (rx >> y) & 1 and rows[y] & ~rx:
                z = next(z for z in range(m) if (rows[y] >> z) & 1 and not (rx >> z) & 1)
                return (x, y, z)
    return None


def scan_stable(mul: Table, rows: Rows) -> Optional[Witness]:
    m = len(rows)
    pairs = [(x, y) for x in range(m) for y in range(m) if _has(rows, x, y)]
    for x, y in pairs:
        for u, v in pairs:
            if not _has(rows, mul[x][u], mul[y][v]):
                return (x, y, u, v)
    return None


def scan_left_regular(mul: Table, rows: Rows) -> Optional[Witness]:
    """(u,v) ∈ ρ → (xu, xv) ∈ ρ; witness (u, v, x)."""
    m = len(rows)
    for u in range(m):
        for v in range(m):
            if not _has(rows, u, v):
                continue
            for x in range(m):
                if not _has(rows, mul[x][u], mul[x][v]):
                    return (u, v, x)
    return None


def scan_right_regular(mul: Table, rows: Rows) -> Optional[Witness]:
    """(x,y) ∈ ρ → (xu, yu) ∈ ρ; witness (x, y, u)."""
    m = len(rows)
    for x in range(m):
        for y in range(m):
            if not _has(rows, x, y):
                continue
            for u in range(m):
                if not _has(rows, mul[x][u], mul[y][u]):
                    return (x, y, u)
    return None


def scan_left_ideal(mul: Table, rows: Rows) -> Optional[Witness]:
    """(x,y) ∈ ρ → (ux, y) ∈ ρ; witness (x, y, u)."""
    m = len(rows)
    for x in range(m):
        for y in range(m):
            if not _has(rows, x, y):
                continue
            for u in range(m):
                if not _has(rows, mul[u][x], y):
                    return (x, y, u)
    return None


def scan_right_negative(mul: Table, rows: Rows) -> Optional[Witness]:
    """(x, yu) ∈ ρ → (x, y) ∈ ρ; witness (x, y, u)."""
    m = len(rows)
    for x in range(m):
        for y in range(m):
            if _has(rows, x, y):
                continue
            for u in range(m):
                if _has(rows, x, mul[y][u]):
                    return (x, y, u)
    return None


def scan_contains(inner: Rows, outer: Rows) -> Optional[Witness]:
    """First pair of `inner` missing from `outer`."""
    m = len(inner)
    for x in range(m):
        for y in range(m):
            if _has(inner, x, y) and not _has(outer, x, y):
                return (x, y)
    return None


def relation_properties(system: AbstractSystem, rho: Relation) -> CheckReport:
    if rho.size != system.size:
        raise UsageError(f"relation size {rho.size} does not match system size {system.size}")
    mul, rows = system.mul, rho.rows
    return CheckReport.of(
        ("stable", scan_stable(mul, rows)),
        ("left-regular", scan_left_regular(mul, rows)),
        ("right-regular", scan_right_regular(mul, rows)),
        ("left-ideal", scan_left_ideal(mul, rows)),
        ("right-negative", scan_right_negative(mul, rows)),
        ("quasi-order", scan_quasi_order(rows)),
    )


# ======================================================================
# Identities
# ======================================================================

def _scan_dt1(mul: Table, meet: Table) -> Optional[Witness]:
    rn = range(len(mul))
    for x in rn:
        mx = mul[x]
        for y in rn:
            for z in rn:
                if mx[meet[y][z]] != meet[mx[y]][mx[z]]:
                    return (x, y, z)
    return None


def _scan_dt3(mul: Table, meet: Table) -> Optional[Witness]:
    rn = range(len(mul))
    for x in rn:
        for y in rn:
            xy = meet[x][y]
            for z in rn:
                if mul[xy][z] != meet[mul[x][z]][mul[y][z]]:
                    return (x, y, z)
    return None


def check_dt1(system: AbstractSystem) -> CheckReport:
    """x(y⋏z) = xy ⋏ xz."""
    require_valid(system, "dt-1")
    return CheckReport.of(("dt-1", _scan_dt1(system.mul, system.meet)))


def check_dt2(system: AbstractSystem) -> CheckReport:
    """(x⋏y⋏z)u ⋏ (y⋏z)v = (x⋏y)u ⋏ (y⋏z)v for x, y, z ∈ G and u, v ∈ G¹."""
    require_valid(system, "dt-2")
    m = system.size
    meet = system.meet
    t, k = one_adjoined(system)
    for x in range(m):
        for y in range(m):
            xy = meet[x][y]
            for z in range(m):
                yz = meet[y][z]
                xyz = meet[xy][z]
                for u in range(k):
                    left_u = t[xyz][u]
                    right_u = t[xy][u]
                    for v in range(k):
                        yzv = t[yz][v]
                        if meet[left_u][yzv] != meet[right_u][yzv]:
                            return CheckReport.of(("dt-2", _lbl((x, y, z, u, v), m)))
    return CheckReport.of(("dt-2", None))


def check_dt3(system: AbstractSystem) -> CheckReport:
    """(x⋏y)z = xz ⋏ yz."""
    require_valid(system, "dt-3")
    return CheckReport.of(("dt-3", _scan_dt3(system.mul, system.meet)))


def check_dt4(system: AbstractSystem) -> CheckReport:
    """xv⋏uv⋏uy⋏xy = xv⋏uv⋏uy for x, y, u, v ∈ G¹ with xv, uv, uy, xy ∈ G."""
    require_valid(system, "dt-4")
    m = system.size
    meet = system.meet
    t, k = one_adjoined(system)
    for x in range(k):
        for y in range(k):
            xy = t[x][y]
            if xy >= m:
                continue
            for u in range(k):
                uy = t[u][y]
                if uy >= m:
                    continue
                for v in range(k):
                    xv, uv = t[x][v], t[u][v]
                    if xv >= m or uv >= m:
                        continue
                    lhs3 = meet[meet[xv][uv]][uy]
                    if meet[lhs3][xy] != lhs3:
                        return CheckReport.of(("dt-4", _lbl((x, y, u, v), m)))
    return CheckReport.of(("dt-4", None))


# ======================================================================
# Theorem batteries
# ======================================================================

def _require_chi(system: AbstractSystem, what: str) -> Relation:
    if system.chi is None:
        raise UsageError(f"{what} requires a chi relation")
    return system.chi


def _scan_f_tr11(meet: Table, chi: Rows) -> Optional[Witness]:
    """x ⊏ x⋏y → x ≤ y."""
    m = len(meet)
    for x in range(m):
        for y in range(m):
            xy = meet[x][y]
            if _has(chi, x, xy) and xy != x:
                return (x, y)
    return None


def _scan_f_tr12(star: list[list[int]], meet: Table, right: int) -> Optional[Witness]:
    """(x⋏y)u ≤ yu for x, y ∈ G and u ranging over the first `right` columns of `star`."""
    m = len(meet)
    for x in range(m):
        for y in range(m):
            xy = meet[x][y]
            for u in range(right):
                a, b = star[xy][u], star[y][u]
                if meet[a][b] != a:
                    return _lbl((x, y, u), m)
    return None


def scan_f_tr13(star: list[list[int]], meet: Table, chi: Rows) -> Optional[Witness]:
    """x⊏y⋏z ∧ x⊏(z⋏v)u → x⊏(y⋏z⋏v)u for u ∈ G ∪ {ε}."""
    m = len(meet)
    k = m + 1
    for x in range(m):
        cx = chi[x]
        for y in range(m):
            for z in range(m):
                yz = meet[y][z]
                if not (cx >> yz) & 1:
                    continue
                for v in range(m):
                    zv = meet[z][v]
                    yzv = meet[yz][v]
                    for u in range(k):
                        if (cx >> star[zv][u]) & 1 and not (cx >> star[yzv][u]) & 1:
                            return _lbl((x, y, z, v, u), m)
    return None


def check_theorem3(system: AbstractSystem) -> CheckReport:
    """χ is a left regular, right negative quasi-order containing ζ, plus dt-1 and f-tr11..13."""
    chi = _require_chi(system, "Theorem 3 checks")
    require_valid(system, "Theorem 3 checks")
    mul, meet, rows = system.mul, system.meet, chi.rows
    star = star_table(mul)
    return CheckReport.of(
        ("chi.quasi-order", scan_quasi_order(rows)),
        ("chi.left-regular", scan_left_regular(mul, rows)),
        ("chi.right-negative", scan_right_negative(mul, rows)),
        ("zeta-in-chi", scan_contains(zeta_of(meet).rows, rows)),
        ("dt-1", _scan_dt1(mul, meet)),
        ("f-tr11", _scan_f_tr11(meet, rows)),
        ("f-tr12", _scan_f_tr12(star, meet, system.size + 1)),
        ("f-tr13", scan_f_tr13(star, meet, rows)),
    )


def check_theorem4(system: AbstractSystem) -> CheckReport:
    return check_theorem3(system) + check_dt3(system)


def check_f_tr14(system: AbstractSystem) -> CheckReport:
    """x ⊢ y ↔ x ⊏ xy."""
    chi = _require_chi(system, "f-tr14")
    mul, delta, rows = system.mul, system.delta.rows, chi.rows
    m = system.size
    for x in range(m):
        for y in range(m):
            if _has(delta, x, y) != _has(rows, x, mul[x][y]):
                return CheckReport.of(("f-tr14", (x, y)))
    return CheckReport.of(("f-tr14", None))


def check_theorem7(system: AbstractSystem, invertible: bool = False) -> CheckReport:
    """δ left-ideal, f-29 (= dt-1), f-30, f-31 and f-32 against the synthesized χ₀."""
    from transalg.closure.chi0 import chi0

    require_valid(system, "Theorem 7 checks")
    mul, meet, delta = system.mul, system.meet, system.delta.rows
    m = system.size
    c0 = chi0(system).rows

    def f31() -> Optional[Witness]:
        for x in range(m):
            for y in range(m):
                xy = meet[x][y]
                if _has(c0, x, xy) and xy != x:
                    return (x, y)
        return None

    def f32() -> Optional[Witness]:
        for x in range(m):
            for y in range(m):
                if _has(c0, x, mul[x][y]) and not _has(delta, x, y):
                    return (x, y)
        return None

    report = CheckReport.of(
        ("delta.left-ideal", scan_left_ideal(mul, delta)),
        ("f-29", _scan_dt1(mul, meet)),
        ("f-30", _scan_f_tr12([list(r) for r in mul], meet, m)),
        ("f-31", f31()),
        ("f-32", f32()),
    )
    if invertible:
        report = report + check_dt3(system)
    return report


def _theorem1(s: AbstractSystem) -> CheckReport:
    return check_dt1(s) + check_dt2(s)


def _theorem2(s: AbstractSystem) -> CheckReport:
    return check_dt1(s) + check_dt3(s) + check_dt4(s)


def _theorem5(s: AbstractSystem) -> CheckReport:
    return check_theorem3(s) + check_f_tr14(s)


def _theorem6(s: AbstractSystem) -> CheckReport:
    return check_theorem4(s) + check_f_tr14(s)


BATTERIES: dict[int, Callable[[AbstractSystem], CheckReport]] = {
    1: _theorem1,
    2: _theorem2,
    3: check_theorem3,
    4: check_theorem4,
    5: _theorem5,
    6: _theorem6,
    7: check_theorem7,
}

# plain theorem -> its invertible-transformation counterpart
INVERTIBLE_VARIANT = {1: 2, 3: 4, 5: 6}


def battery(system: AbstractSystem, theorem: int = 7, invertible: bool = False) -> CheckReport:
    """Structural records followed by the records of the chosen theorem.

    Stops after the structural records when they fail, since the theorem
    checks presuppose a semigroup and a semilattice.
    """
    if theorem not in BATTERIES:
        raise UsageError(f"unknown theorem {theorem}; choose one of {sorted(BATTERIES)}")
    if theorem in (3, 4, 5, 6):
        _require_chi(system, f"Theorem {theorem}")
    structural = is_semigroup(system) + is_semilattice(system)
    if not structural.passed:
        return structural
    if theorem == 7:
        return structural + check_theorem7(system, invertible=invertible)
    if invertible:
        theorem = INVERTIBLE_VARIANT.get(theorem, theorem)
    return structural + BATTERIES[theorem](system)
