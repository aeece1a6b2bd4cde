"""Line-oriented algebra file format.

    size m
    mul            m rows of m indices
    meet           m rows of m indices
    delta          m rows of m bits
    [chi           m rows of m bits]
    end

Blank lines and lines starting with ``#`` are ignored. Errors carry the
1-based line number of the offending line.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Optional, Union

from transalg.algebra.base import AbstractSystem, Relation
from transalg.core.errors import ParseError

_BLOCKS = ("mul", "meet", "delta")


class _Lines:
    """Cursor over the significant lines of an algebra file."""

    def __init__(self, text: str):
        self._items = [
            (no, line.strip())
            for no, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        ]
        self._pos = 0
        self._last = len(text.splitlines()) or 1

    def next(self, expecting: str) -> tuple[int, str]:
        if self._pos >= len(self._items):
            raise ParseError(f"unexpected end of input, expected {expecting}", self._last)
        item = self._items[self._pos]
        self._pos += 1
        return item

    def rest(self) -> Iterator[tuple[int, str]]:
        while self._pos < len(self._items):
            yield self.next("")


def _header(lines: _Lines, keyword: str) -> None:
    no, line = lines.next(f"'{keyword}'")
    if line != keyword:
        raise ParseError(f"expected '{keyword}', got '{line}'", no)


def _rows(lines: _Lines, m: int, name: str, bits: bool) -> list[list[int]]:
    rows = []
    for r in range(m):
        no, line = lines.next(f"row {r} of {name}")
        fields = line.split()
        if len(fields) != m:
            raise ParseError(f"{name} row {r} has {len(fields)} entries, expected {m}", no)
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"{name} row {r} has a non-integer entry: '{line}'", no) from None
        limit = 2 if bits else m
        for v in values:
            if not 0 <= v < limit:
                what = "a bit (0 or 1)" if bits else f"an index in 0..{m - 1}"
                raise ParseError(f"{name} row {r}: {v} is not {what}", no)
        rows.append(values)
    return rows


def parse(text: str, name: Optional[str] = None) -> AbstractSystem:
    lines = _Lines(text)
    no, line = lines.next("'size m'")
    fields = line.split()
    if len(fields) != 2 or fields[0] != "size" or not fields[1].isdigit() or int(fields[1]) < 1:
        raise ParseError(f"malformed header '{line}', expected 'size m' with m >= 1", no)
    m = int(fields[1])

    tables: dict[str, list[list[int]]] = {}
    for block in _BLOCKS:
        _header(lines, block)
        tables[block] = _rows(lines, m, block, bits=block == "delta")

    chi = None
    no, line = lines.next("'chi' or 'end'")
    if line == "chi":
        chi = Relation.from_matrix(_rows(lines, m, "chi", bits=True))
        no, line = lines.next("'end'")
    if line != "end":
        raise ParseError(f"expected 'end', got '{line}'", no)
    for no, line in lines.rest():
        raise ParseError(f"unexpected content after 'end': '{line}'", no)

    return AbstractSystem(
        m,
        tuple(map(tuple, tables["mul"])),
        tuple(map(tuple, tables["meet"])),
        Relation.from_matrix(tables["delta"]),
        chi,
        name,
    )


def format_relation(rho: Relation) -> str:
    return "\n".join(" ".join(str(b) for b in row) for row in rho.to_matrix())


def serialize(system: AbstractSystem) -> str:
    out = [f"size {system.size}"]
    if system.name:
        out.insert(0, f"# {system.name}")
    for block, table in (("mul", system.mul), ("meet", system.meet)):
        out.append(block)
        out.extend(" ".join(str(v) for v in row) for row in table)
    out.append("delta")
    out.append(format_relation(system.delta))
    if system.chi is not None:
        out.append("chi")
        out.append(format_relation(system.chi))
    out.append("end")
    return "\n".join(out) + "\n"


def load(path: Union[str, Path]) -> AbstractSystem:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read(), name=path.stem)


def dump(system: AbstractSystem, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(serialize(system), encoding="utf-8")
    return path
