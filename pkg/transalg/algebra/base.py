"""Value objects for finite abstract systems (G, ·, ⋏, δ[, χ]).

Hierarchy:
    AbstractSystem
    ├── mul, meet: Cayley tables (tuples of rows)
    ├── delta: Relation
    └── chi: Optional[Relation]
    Relation: square bit-matrix stored as one int bitmask per row
    StarElement: an element of G or the adjoined element e
    CheckReport: ordered CheckRecords (condition, verdict, witness)

Validity (associativity, semilattice laws) is NOT assumed at construction;
see transalg.algebra.checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Final, Iterable, Iterator, Optional, Sequence, Union

from transalg.core.bitset import full_mask, is_subset
from transalg.core.errors import UsageError

Table = tuple[tuple[int, ...], ...]
Witness = tuple[Union[int, str], ...]


# ======================================================================
# Relation
# ======================================================================

@dataclass(frozen=True)
class Relation:
    """Binary relation on {0..size-1}; bit y of rows[x] is set iff (x, y) ∈ ρ."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        if len(rows) != self.size:
            raise UsageError(f"relation has {len(rows)} rows, expected {self.size}")
        limit = full_mask(self.size)
        for x, r in enumerate(rows):
            if r & ~limit:
                raise UsageError(f"relation row {x} has bits outside 0..{self.size - 1}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * size
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(size, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int | bool]]) -> "Relation":
        return cls(len(matrix), tuple(sum(1 << y for y, bit in enumerate(row) if bit) for row in matrix))

    @classmethod
    def from_int(cls, size: int, bits: int) -> "Relation":
        """Decode the flat bit layout: pair (x, y) at bit x*size + y."""
        mask = full_mask(size)
        return cls(size, tuple((bits >> (x * size)) & mask for x in range(size)))

    @classmethod
    def empty(cls, size: int) -> "Relation":
        return cls(size, (0,) * size)

    @classmethod
    def full(cls, size: int) -> "Relation":
        return cls(size, (full_mask(size),) * size)

    @classmethod
    def identity(cls, size: int) -> "Relation":
        return cls(size, tuple(1 << x for x in range(size)))

    def holds(self, x: int, y: int) -> bool:
        return (self.rows[x] >> y) & 1 == 1

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return self.holds(*pair)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.size):
            for y in range(self.size):
                if self.holds(x, y):
                    yield (x, y)

    def issubset(self, other: "Relation") -> bool:
        return all(is_subset(a, b) for a, b in zip(self.rows, other.rows))

    def to_int(self) -> int:
        return sum(r << (x * self.size) for x, r in enumerate(self.rows))

    def to_matrix(self) -> list[list[int]]:
        return [[int(self.holds(x, y)) for y in range(self.size)] for x in range(self.size)]

    def relabel(self, perm: Sequence[int]) -> "Relation":
        return Relation.from_pairs(self.size, ((perm[x], perm[y]) for x, y in self.pairs()))


# ======================================================================
# Abstract system
# ======================================================================

def _as_table(rows: Sequence[Sequence[int]], size: int, label: str) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != size or any(len(row) != size for row in table):
        raise UsageError(f"{label} table must be {size}x{size}")
    for x, row in enumerate(table):
        for y, v in enumerate(row):
            if not 0 <= v < size:
                raise UsageError(f"{label}[{x}][{y}] = {v} is outside 0..{size - 1}")
    return table


@dataclass(frozen=True)
class AbstractSystem:
    """Finite system (G, ·, ⋏, δ) with an optional χ.

    mul[x][y] is the abstract product x·y ("apply x, then y").
    """

    size: int
    mul: Table
    meet: Table
    delta: Relation
    chi: Optional[Relation] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise UsageError(f"size must be positive, got {self.size}")
        object.__setattr__(self, "mul", _as_table(self.mul, self.size, "mul"))
        object.__setattr__(self, "meet", _as_table(self.meet, self.size, "meet"))
        for label, rel in (("delta", self.delta), ("chi", self.chi)):
            if rel is not None and rel.size != self.size:
                raise UsageError(f"{label} has size {rel.size}, expected {self.size}")

    @property
    def elements(self) -> range:
        return range(self.size)

    def with_delta(self, delta: Relation) -> "AbstractSystem":
        return AbstractSystem(self.size, self.mul, self.meet, delta, self.chi, self.name)

    def with_chi(self, chi: Optional[Relation]) -> "AbstractSystem":
        return AbstractSystem(self.size, self.mul, self.meet, self.delta, chi, self.name)

    def identity_element(self) -> Optional[int]:
        """A two-sided identity of (G, ·), if one exists."""
        rn = range(self.size)
        for e in rn:
            if all(self.mul[e][x] == x == self.mul[x][e] for x in rn):
                return e
        return None

    def relabel(self, perm: Sequence[int]) -> "AbstractSystem":
        """Rename element x to perm[x] in every table and relation."""
        m = self.size
        if sorted(perm) != list(range(m)):
            raise UsageError(f"not a permutation of 0..{m - 1}: {list(perm)}")
        mul = [[0] * m for _ in range(m)]
        mt = [[0] * m for _ in range(m)]
        for x in range(m):
            for y in range(m):
                mul[perm[x]][perm[y]] = perm[self.mul[x][y]]
                mt[perm[x]][perm[y]] = perm[self.meet[x][y]]
        chi = self.chi.relabel(perm) if self.chi is not None else None
        return AbstractSystem(m, tuple(map(tuple, mul)), tuple(map(tuple, mt)), self.delta.relabel(perm), chi, self.name)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<AbstractSystem{label} size={self.size} chi={'yes' if self.chi is not None else 'no'}>"


# ======================================================================
# G* / G¹ elements
# ======================================================================

@dataclass(frozen=True)
class StarElement:
    """Element of G ∪ {e}; index None is the adjoined element e."""

    index: Optional[int] = None

    def __str__(self) -> str:
        return "e" if self.index is None else str(self.index)


E: Final = StarElement()


def Elem(index: int) -> StarElement:
    if index < 0:
        raise UsageError(f"element index must be >= 0, got {index}")
    return StarElement(index)


# ======================================================================
# Check reports
# ======================================================================

@dataclass(frozen=True)
class CheckRecord:
    condition_id: str
    passed: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if self.passed and self.witness is not None:
            raise UsageError(f"{self.condition_id}: passing record cannot carry a witness")
        if not self.passed and self.witness is None:
            raise UsageError(f"{self.condition_id}: failing record needs a witness")

    @classmethod
    def of(cls, condition_id: str, witness: Optional[Witness]) -> "CheckRecord":
        """PASS when no witness was found, FAIL with it otherwise."""
        return cls(condition_id, witness is None, witness)

    def to_line(self) -> str:
        if self.passed:
            return f"{self.condition_id} PASS"
        return f"{self.condition_id} FAIL witness=({','.join(str(w) for w in self.witness or ())})"


@dataclass(frozen=True)
class CheckReport:
    records: tuple[CheckRecord, ...] = ()

    @classmethod
    def of(cls, *pairs: tuple[str, Optional[Witness]]) -> "CheckReport":
        return cls(tuple(CheckRecord.of(cid, w) for cid, w in pairs))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def __add__(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.records + other.records)

    def __iter__(self) -> Iterator[CheckRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def get(self, condition_id: str) -> CheckRecord:
        for r in self.records:
            if r.condition_id == condition_id:
                return r
        raise KeyError(condition_id)

    @property
    def condition_ids(self) -> list[str]:
        return [r.condition_id for r in self.records]

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_text(self) -> str:
        return "\n".join(r.to_line() for r in self.records)


def label(index: int, size: int) -> Union[int, str]:
    """Witness entry: indices >= size stand for the adjoined element."""
    return "e" if index >= size else index
