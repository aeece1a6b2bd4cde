"""Shared fixtures.

The worked example is Φ = ⟨c0, id⟩ on base 2 closed under ∘ and ∩, which is
{p, c0, id} with p = (0,-), c0 = (0,0), id = (0,1). In canonical order the
element indices are p = 0, c0 = 1, id = 2.
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Optional, Sequence

import pytest

from transalg.algebra.base import AbstractSystem, Relation
from transalg.maps.pfun import parse_map_list
from transalg.maps.tsemi import TransSemigroup, enumerate_all, extract_abstract, generate

TRIVIAL_TEXT = "size 1\nmul\n0\nmeet\n0\ndelta\n1\nend\n"


def _make(
    mul: Sequence[Sequence[int]],
    meet: Sequence[Sequence[int]],
    delta: Optional[Sequence[Sequence[int]]] = None,
    chi: Optional[Sequence[Sequence[int]]] = None,
) -> AbstractSystem:
    m = len(mul)
    d = Relation.from_matrix(delta) if delta is not None else Relation.full(m)
    c = Relation.from_matrix(chi) if chi is not None else None
    return AbstractSystem(m, tuple(map(tuple, mul)), tuple(map(tuple, meet)), d, c)


@pytest.fixture
def make_system() -> Callable[..., AbstractSystem]:
    return _make


@pytest.fixture
def example_phi() -> TransSemigroup:
    return generate(2, parse_map_list("0,0;0,1"), with_meet=True)


@pytest.fixture
def example(example_phi: TransSemigroup) -> AbstractSystem:
    return extract_abstract(example_phi)


@pytest.fixture
def trivial() -> AbstractSystem:
    return AbstractSystem(1, ((0,),), ((0,),), Relation.identity(1))


@pytest.fixture
def chain2() -> AbstractSystem:
    """2-chain 0 < 1 with mul = meet = min and full χ."""
    t = [[0, 0], [0, 1]]
    return _make(t, t, chi=[[1, 1], [1, 1]])


@pytest.fixture
def nonassoc() -> AbstractSystem:
    return _make([[1, 0], [0, 0]], [[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def corpus2() -> list[AbstractSystem]:
    return [extract_abstract(phi) for phi in enumerate_all(2, with_meet=True)]


@pytest.fixture(scope="session")
def corpus2_invertible() -> list[AbstractSystem]:
    return [extract_abstract(phi) for phi in enumerate_all(2, with_meet=True, invertible_only=True)]


@pytest.fixture
def trivial_file(tmp_path: Path) -> Path:
    p = tmp_path / "trivial.alg"
    p.write_text(TRIVIAL_TEXT)
    return p
