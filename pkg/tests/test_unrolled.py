"""Tests for the unrolled F_n membership schema."""

from __future__ import annotations

import pytest

from transalg.algebra.base import Relation
from transalg.closure import F1, Fn_unrolled, Reading, check_schemas
from transalg.core.errors import UsageError


def _singletons(m):
    return [{x} for x in range(m)]


def _doubletons(m):
    return [{x, y} for x in range(m) for y in range(x + 1, m)]


def test_n1_matches_F1_on_example(example):
    for H in _singletons(3) + _doubletons(3):
        expected = F1(example, H)
        for z in example.elements:
            assert Fn_unrolled(example, z, H, 1) == (z in expected), (z, H)


def test_n2_matches_iterated_F1_on_example(example):
    for H in _singletons(3):
        expected = F1(example, F1(example, H))
        for z in example.elements:
            assert Fn_unrolled(example, z, H, 2) == (z in expected), (z, H)


def test_members_of_H_always_satisfy_n1(corpus2):
    for s in corpus2:
        if s.size > 4:
            continue
        for H in _singletons(s.size) + _doubletons(s.size):
            for z in H:
                assert Fn_unrolled(s, z, H, 1)


def test_n1_on_small_corpus(corpus2):
    for s in corpus2:
        if s.size > 4:
            continue
        for H in _singletons(s.size) + _doubletons(s.size):
            expected = F1(s, H)
            for z in s.elements:
                assert Fn_unrolled(s, z, H, 1) == (z in expected)


def test_n2_on_small_corpus(corpus2):
    for s in corpus2:
        if s.size > 3:
            continue
        for H in _singletons(s.size):
            expected = F1(s, F1(s, H))
            for z in s.elements:
                assert Fn_unrolled(s, z, H, 2) == (z in expected)


def test_readings_coincide_for_n1(example):
    for H in _singletons(3) + _doubletons(3):
        for z in example.elements:
            assert Fn_unrolled(example, z, H, 1, Reading.LITERAL) == Fn_unrolled(example, z, H, 1)


@pytest.mark.parametrize("n", [0, 3])
def test_unsupported_depth(example, n):
    with pytest.raises(UsageError, match="supports n"):
        Fn_unrolled(example, 0, {0}, n)


def test_element_out_of_range(example):
    with pytest.raises(UsageError, match="outside"):
        Fn_unrolled(example, 7, {0}, 1)


class TestSchemas:
    def test_example_passes(self, example):
        report = check_schemas(example)
        assert report.condition_ids == ["A_1", "B_1", "A_2", "B_2"]
        assert report.passed

    def test_depth_one_only(self, example):
        assert check_schemas(example, max_n=1).condition_ids == ["A_1", "B_1"]

    def test_corpus(self, corpus2):
        for s in corpus2:
            if s.size <= 3:
                assert check_schemas(s).passed, s.name

    def test_empty_delta_breaks_B(self, example):
        report = check_schemas(example.with_delta(Relation.empty(3)), max_n=1)
        assert report.get("B_1").witness == (0, 0)
