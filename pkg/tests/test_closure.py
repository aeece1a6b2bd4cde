"""Tests for G*, F1, the f-closure and the f-closedness tests."""

from __future__ import annotations

import pytest

from transalg.algebra.base import E, Elem
from transalg.closure import (
    F1,
    boxdot_leq,
    closure_chain,
    closure_oracle,
    f_closure,
    is_f_closed,
    is_f_closed_prop6,
    left_translation_witness,
    star_delta,
    star_leq,
    star_mul,
)
from transalg.core.bitset import members
from transalg.core.errors import UsageError


def _small(corpus, limit):
    return [s for s in corpus if s.size <= limit]


def _subsets(m):
    return [set(members(h)) for h in range(1 << m)]


class TestStar:
    def test_adjoined_element_is_identity(self, example):
        assert star_mul(example, E, Elem(2)) == Elem(2)
        assert star_mul(example, Elem(1), E) == Elem(1)
        assert star_mul(example, E, E) == E

    def test_everything_is_related_to_e(self, example):
        assert star_delta(example, Elem(1), E)
        assert star_delta(example, E, E)
        assert not star_delta(example, E, Elem(0))

    def test_order_on_e(self, example):
        assert star_leq(example, E, E)
        assert not star_leq(example, E, Elem(0))
        assert not star_leq(example, Elem(0), E)
        assert star_leq(example, Elem(0), Elem(1))

    def test_boxdot(self, example):
        assert boxdot_leq(example, E, E, E)
        for x in example.elements:
            assert boxdot_leq(example, Elem(x), E, Elem(x))
        # id ⊢ p fails
        assert not boxdot_leq(example, Elem(2), Elem(0), Elem(0))

    def test_out_of_range(self, example):
        with pytest.raises(UsageError):
            star_mul(example, Elem(5), E)


class TestF1:
    def test_trivial(self, trivial):
        assert F1(trivial, {0}) == {0}

    def test_example_values(self, example):
        assert F1(example, {0}) == {0, 1, 2}
        assert F1(example, {1}) == {1, 2}
        assert F1(example, {2}) == {1, 2}
        assert F1(example, set()) == set()

    def test_contains_argument(self, corpus2):
        for s in _small(corpus2, 4):
            for H in _subsets(s.size):
                assert H <= F1(s, H)

    def test_monotone(self, example):
        subsets = _subsets(example.size)
        for A in subsets:
            for B in subsets:
                if A <= B:
                    assert F1(example, A) <= F1(example, B)

    def test_requires_valid_system(self, nonassoc):
        with pytest.raises(UsageError, match="F1 requires"):
            F1(nonassoc, {0})

    def test_rejects_out_of_range_elements(self, example):
        with pytest.raises(UsageError, match="outside"):
            F1(example, {3})


class TestClosure:
    def test_chain_of_example(self, example):
        assert closure_chain(example, {1}) == [{1}, {1, 2}]
        assert closure_chain(example, {1, 2}) == [{1, 2}]

    def test_whole_and_empty(self, example):
        assert f_closure(example, example.elements) == set(example.elements)
        assert f_closure(example, set()) == set()

    def test_fixpoint_is_f_closed(self, corpus2):
        for s in _small(corpus2, 4):
            for H in _subsets(s.size):
                chain = closure_chain(s, H)
                assert all(a <= b for a, b in zip(chain, chain[1:]))
                assert len(chain) <= s.size + 1
                closed = chain[-1]
                assert F1(s, closed) == closed
                assert is_f_closed(s, closed)

    def test_matches_four_rule_oracle(self, corpus2):
        for s in _small(corpus2, 4):
            for H in _subsets(s.size):
                assert f_closure(s, H) == closure_oracle(s, H), (s.name, H)

    def test_definition_and_four_conditions_agree(self, corpus2):
        for s in _small(corpus2, 4):
            for H in _subsets(s.size):
                assert is_f_closed(s, H) == is_f_closed_prop6(s, H), (s.name, H)

    def test_whole_set_is_closed(self, example, trivial):
        assert is_f_closed(example, {0, 1, 2})
        assert is_f_closed_prop6(example, {0, 1, 2})
        assert is_f_closed(trivial, {0})

    def test_singleton_not_closed(self, example):
        # 2·1 = 1 and 2 ⊢ 1 force 1 into any closed set holding 2
        assert not is_f_closed(example, {2})
        assert not is_f_closed_prop6(example, {2})


def test_left_translation_law(corpus2):
    for s in _small(corpus2, 4):
        assert left_translation_witness(s) is None, s.name
