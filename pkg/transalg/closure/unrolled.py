"""Unrolled membership schema for F_n(H), n ∈ {1, 2}.

The schema is a binary tree of existential nodes indexed 1..2^n-1. Node j
with target c asks for u, v, w ∈ G and x, y, t ∈ G* such that

    (u⋏v⋏w)x ⊡ y ≤ c·t

The root's target is z. An inner node i passes target u_i⋏v_i to child 2i
and (v_i⋏w_i)x_i to child 2i+1. A leaf i requires u_i⋏v_i ∈ H and
(v_i⋏w_i)x_i ∈ H; under the LITERAL reading the first membership is
u_1⋏v_i ∈ H instead, with u_1 taken from the root.

Evaluation is a brute-force search over node tuples, with subtrees
memoized on (depth, target, u_1).
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

from transalg.algebra.base import AbstractSystem, CheckReport, Witness
from transalg.closure.fclosure import as_mask, prepare_extension
from transalg.closure.star import StarExtension
from transalg.core.errors import UsageError

MAX_UNROLLED_N = 2


class Reading(str, Enum):
    INDEXED = "indexed"  # u_i⋏v_i ∈ H at leaf i
    LITERAL = "literal"  # u_1⋏v_i ∈ H at leaf i


class _Schema:
    def __init__(self, system: AbstractSystem, ext: StarExtension, h: int, n: int, reading: Reading):
        self.system = system
        self.ext = ext
        self.h = h
        self.n = n
        self.reading = reading
        self._memo: dict[tuple[int, int, Optional[int]], bool] = {}

    def holds(self, z: int) -> bool:
        return self._node(1, z, None)

    def _node(self, depth: int, target: int, u1: Optional[int]) -> bool:
        key = (depth, target, u1 if self.reading is Reading.LITERAL else None)
        if key not in self._memo:
            self._memo[key] = self._search(depth, target, u1)
        return self._memo[key]

    def _search(self, depth: int, target: int, u1: Optional[int]) -> bool:
        m = self.system.size
        meet = self.system.meet
        mul, leq, delta = self.ext.mul, self.ext.leq, self.ext.delta
        star = self.ext.star_range
        h = self.h
        leaf = depth == self.n
        upper = 0
        for t in star:
            upper |= 1 << mul[target][t]

        for u in range(m):
            root_u = u if depth == 1 else u1
            for v in range(m):
                uv = meet[u][v]
                for w in range(m):
                    uvw = meet[uv][w]
                    vw = meet[v][w]
                    for x in star:
                        a = mul[uvw][x]
                        # ⊡ y ≤ target·t for some y, t
                        if not any(
                            (delta[a] >> y) & 1 and leq[mul[a][y]] & upper
                            for y in star
                        ):
                            continue
                        right = mul[vw][x]
                        if leaf:
                            first = meet[root_u][v] if self.reading is Reading.LITERAL else uv
                            if (h >> first) & 1 and (h >> right) & 1:
                                return True
                        elif self._node(depth + 1, uv, root_u) and self._node(depth + 1, right, root_u):
                            return True
        return False


def _check_n(n: int) -> None:
    if n not in (1, MAX_UNROLLED_N):
        raise UsageError(f"unrolled schema supports n in {{1, {MAX_UNROLLED_N}}} only, got {n}")


def Fn_unrolled(
    system: AbstractSystem,
    z: int,
    H: Iterable[int],
    n: int,
    reading: Reading = Reading.INDEXED,
) -> bool:
    """True iff the depth-n schema holds for z, i.e. z ∈ F_n(H) under the given reading."""
    _check_n(n)
    ext = prepare_extension(system, "Fn_unrolled")
    if not 0 <= z < system.size:
        raise UsageError(f"element {z} is outside 0..{system.size - 1}")
    return _Schema(system, ext, as_mask(system, H), n, reading).holds(z)


def check_schemas(
    system: AbstractSystem,
    max_n: int = MAX_UNROLLED_N,
    reading: Reading = Reading.INDEXED,
) -> CheckReport:
    """A_n: schema(x⋏y, {x}) → x ≤ y and B_n: schema(xy, {x}) → x ⊢ y, for n = 1..max_n."""
    _check_n(max_n)
    ext = prepare_extension(system, "check_schemas")
    m = system.size
    meet, mul, delta = system.meet, system.mul, system.delta

    records: list[tuple[str, Optional[Witness]]] = []
    for n in range(1, max_n + 1):
        schemas = [_Schema(system, ext, 1 << x, n, reading) for x in range(m)]
        a_wit = b_wit = None
        for x in range(m):
            for y in range(m):
                xy = meet[x][y]
                if a_wit is None and xy != x and schemas[x].holds(xy):
                    a_wit = (x, y)
                if b_wit is None and not delta.holds(x, y) and schemas[x].holds(mul[x][y]):
                    b_wit = (x, y)
        records.append((f"A_{n}", a_wit))
        records.append((f"B_{n}", b_wit))
    return CheckReport.of(*records)
