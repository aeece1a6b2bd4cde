"""Tests for representation verification and search."""

from __future__ import annotations

import pytest

from transalg.algebra.base import Relation
from transalg.core.errors import UsageError
from transalg.maps.pfun import is_invertible, parse_map, parse_map_list
from transalg.maps.tsemi import enumerate_all, extract_abstract, generate
from transalg.repsearch import (
    ConditionsFail,
    Found,
    NotFoundUpToBound,
    Representation,
    SearchOrder,
    find_representation,
    verify_representation,
)


def _identity_rep(phi) -> Representation:
    return Representation(phi.base_size, phi.elements)


class TestVerify:
    def test_identity_representation(self, example_phi, example):
        report = verify_representation(example, _identity_rep(example_phi))
        assert report.condition_ids == ["injective", "mul-law", "meet-law", "delta-law", "chi-law"]
        assert report.passed

    def test_swap_breaks_mul_law(self, example_phi, example):
        p, c0, ident = example_phi.elements
        report = verify_representation(example, Representation(2, (p, ident, c0)))
        assert report.get("mul-law").witness == (1, 0)

    def test_swap_breaks_meet_law(self, example_phi, example):
        p, c0, ident = example_phi.elements
        report = verify_representation(example, Representation(2, (c0, p, ident)))
        assert report.get("mul-law").passed
        assert report.get("meet-law").witness == (0, 1)
        assert report.get("delta-law").witness == (2, 0)

    def test_all_empty_maps_not_injective(self, example):
        empty = parse_map("-,-")
        report = verify_representation(example, Representation(2, (empty,) * 3))
        assert report.get("injective").witness == (0, 1)

    def test_length_mismatch(self, example):
        with pytest.raises(UsageError, match="assignment has 1 maps"):
            verify_representation(example, Representation(2, (parse_map("0,1"),)))

    def test_base_mismatch(self):
        with pytest.raises(UsageError, match="base size"):
            Representation(2, (parse_map("0"),))


class TestFind:
    def test_trivial_found_on_base_one(self, trivial):
        outcome = find_representation(trivial, 1)
        assert isinstance(outcome, Found)
        assert outcome.representation.base_size == 1
        assert verify_representation(trivial, outcome.representation).passed

    def test_example_needs_base_two(self, example):
        outcome = find_representation(example, 2)
        assert isinstance(outcome, Found)
        assert outcome.representation.base_size == 2
        assert verify_representation(example, outcome.representation).passed

    def test_not_found_up_to_bound(self, example):
        outcome = find_representation(example, 1)
        assert outcome == NotFoundUpToBound(1)
        assert outcome.to_text() == "NOT-FOUND-UP-TO base=1 (inconclusive)"

    def test_conditions_fail_on_non_associative(self, nonassoc):
        outcome = find_representation(nonassoc, 2)
        assert isinstance(outcome, ConditionsFail)
        assert outcome.report.get("semigroup").witness == (0, 0, 1)

    def test_conditions_fail_on_empty_delta(self, example):
        outcome = find_representation(example.with_delta(Relation.empty(3)), 2)
        assert isinstance(outcome, ConditionsFail)
        assert not outcome.report.get("f-32").passed
        assert outcome.to_text().startswith("CONDITIONS-FAIL\n")

    def test_conditions_fail_on_broken_dt1(self, make_system):
        outcome = find_representation(make_system([[0, 1], [1, 0]], [[0, 0], [0, 1]]), 2)
        assert isinstance(outcome, ConditionsFail)
        assert outcome.report.get("f-29").witness == (1, 0, 1)

    def test_invertible_mode_requires_dt3(self, example):
        outcome = find_representation(example, 2, invertible=True)
        assert isinstance(outcome, ConditionsFail)
        assert not outcome.report.get("dt-3").passed

    def test_deterministic(self, example):
        assert find_representation(example, 2) == find_representation(example, 2)

    def test_parallel_split_matches_sequential(self, example):
        assert find_representation(example, 2, max_workers=4) == find_representation(example, 2)

    def test_constrained_order_still_sound(self, example):
        outcome = find_representation(example, 2, order="constrained")
        assert isinstance(outcome, Found)
        assert verify_representation(example, outcome.representation).passed

    def test_unknown_order(self, example):
        with pytest.raises(UsageError, match="unknown search order"):
            find_representation(example, 2, order="random")

    def test_guard(self, example):
        with pytest.raises(UsageError, match="search guard"):
            find_representation(example, 9, guard=24)

    def test_found_text(self, trivial):
        outcome = find_representation(trivial, 1)
        assert outcome.to_text().splitlines()[0] == "FOUND base=1"


def test_round_trip_over_base_two_corpus():
    for phi in enumerate_all(2):
        s = extract_abstract(phi)
        outcome = find_representation(s, 2)
        assert isinstance(outcome, Found), s.name
        assert verify_representation(s, outcome.representation).passed


def test_round_trip_over_invertible_corpus():
    for phi in enumerate_all(2, invertible_only=True):
        s = extract_abstract(phi)
        outcome = find_representation(s, 2, invertible=True)
        assert isinstance(outcome, Found), s.name
        assert all(is_invertible(f) for f in outcome.representation.assignment)


class TestChiLaw:
    def test_found_respects_domain_inclusion(self):
        # two maps with equal images but different domains
        phi = generate(3, parse_map_list("-,-,0;-,0,-"), with_meet=True)
        s = extract_abstract(phi)
        assert s.chi is not None
        outcome = find_representation(s, 3)
        assert isinstance(outcome, Found)
        report = verify_representation(s, outcome.representation)
        assert report.get("chi-law").passed
        assert report.passed

    def test_unrepresentable_chi_fails_conditions(self, example):
        outcome = find_representation(example.with_chi(Relation.full(3)), 2)
        assert isinstance(outcome, ConditionsFail)
        assert outcome.report.get("f-tr11").witness == (1, 0)

    def test_without_chi_only_theorem7_gates(self, example):
        outcome = find_representation(example.with_chi(None), 2)
        assert isinstance(outcome, Found)
        assert "chi-law" not in verify_representation(example.with_chi(None), outcome.representation).condition_ids

    def test_order_enum_accepted(self, example):
        assert find_representation(example, 2, order=SearchOrder.CONSTRAINED) == find_representation(
            example, 2, order="constrained"
        )


def test_round_trip_over_base_three_corpus():
    for phi in enumerate_all(3):
        if len(phi) > 6:
            continue
        s = extract_abstract(phi)
        outcome = find_representation(s, 3)
        assert isinstance(outcome, Found), s.name
        assert verify_representation(s, outcome.representation).passed, s.name
