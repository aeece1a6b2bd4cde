"""Tests for the command-line interface."""

from __future__ import annotations

from pathlib import Path

import pytest
from typer.testing import CliRunner

from transalg.algebra.base import Relation
from transalg.algebra.fileformat import dump
from transalg.cli import app

runner = CliRunner()


@pytest.fixture
def example_file(tmp_path: Path, example) -> Path:
    return dump(example, tmp_path / "example.alg")


@pytest.fixture
def nonassoc_file(tmp_path: Path, nonassoc) -> Path:
    return dump(nonassoc, tmp_path / "nonassoc.alg")


def test_check_trivial_passes(trivial_file: Path):
    result = runner.invoke(app, ["check", str(trivial_file), "--theorem", "7"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "semigroup PASS"
    assert all(line.endswith("PASS") for line in lines)


def test_check_reports_failure(nonassoc_file: Path):
    result = runner.invoke(app, ["check", str(nonassoc_file)])
    assert result.exit_code == 1
    assert "semigroup FAIL witness=(0,0,1)" in result.stdout


def test_check_malformed_file(tmp_path: Path):
    bad = tmp_path / "bad.alg"
    bad.write_text("size 2\nmul\n0 0\n0 5\n")
    result = runner.invoke(app, ["check", str(bad)])
    assert result.exit_code == 2
    assert "line 4" in result.output


def test_check_unknown_theorem(trivial_file: Path):
    result = runner.invoke(app, ["check", str(trivial_file), "--theorem", "9"])
    assert result.exit_code == 2


def test_check_missing_chi(trivial_file: Path):
    result = runner.invoke(app, ["check", str(trivial_file), "--theorem", "3"])
    assert result.exit_code == 2
    assert "chi" in result.output


def test_extract_worked_example():
    result = runner.invoke(app, ["extract", "--base", "2", "--gens", "0,0;0,1", "--with-meet"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[1] == "size 3"
    assert lines[2:6] == ["mul", "0 0 0", "1 1 1", "0 1 2"]
    assert lines[6:10] == ["meet", "0 0 0", "0 1 0", "0 0 2"]
    assert lines[10:14] == ["delta", "1 1 1", "1 1 1", "0 1 1"]
    assert lines[-1] == "end"


def test_extract_without_meet_closure_fails():
    result = runner.invoke(app, ["extract", "--base", "2", "--gens", "0,0;0,1"])
    assert result.exit_code == 2
    assert "not in Φ" in result.output


def test_extract_base_mismatch():
    result = runner.invoke(app, ["extract", "--base", "3", "--gens", "0,0"])
    assert result.exit_code == 2


def test_closure(example_file: Path):
    result = runner.invoke(app, ["closure", str(example_file), "--set", "1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["closure 1,2", "iterations 1"]


def test_closure_bad_set(example_file: Path):
    result = runner.invoke(app, ["closure", str(example_file), "--set", "a"])
    assert result.exit_code == 2


def test_chi0_matrix(example_file: Path):
    result = runner.invoke(app, ["chi0", str(example_file)])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["1 1 1", "0 1 1", "0 1 1"]


def test_chi0_minimality(example_file: Path):
    result = runner.invoke(app, ["chi0", str(example_file), "--minimality"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "chi0-minimality PASS"


def test_schemas(example_file: Path):
    result = runner.invoke(app, ["schemas", str(example_file), "--max-n", "1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["A_1 PASS", "B_1 PASS"]


def test_schemas_depth_bound(example_file: Path):
    result = runner.invoke(app, ["schemas", str(example_file), "--max-n", "3"])
    assert result.exit_code == 2


def test_enumerate_base_one():
    result = runner.invoke(app, ["enumerate", "--base", "1", "--with-meet"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["begin", "-", "end", "begin", "0", "end", "begin", "-", "0", "end"]


def test_enumerate_base_bound():
    result = runner.invoke(app, ["enumerate", "--base", "5"])
    assert result.exit_code == 2


def test_find_rep_trivial(trivial_file: Path):
    result = runner.invoke(app, ["find-rep", str(trivial_file), "--max-base", "1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "FOUND base=1"


def test_find_rep_not_found(example_file: Path):
    result = runner.invoke(app, ["find-rep", str(example_file), "--max-base", "1"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "NOT-FOUND-UP-TO base=1 (inconclusive)"


def test_find_rep_conditions_fail(tmp_path: Path, example):
    path = dump(example.with_delta(Relation.empty(3)), tmp_path / "nodelta.alg")
    result = runner.invoke(app, ["find-rep", str(path), "--max-base", "2"])
    assert result.exit_code == 1
    assert result.stdout.splitlines()[0] == "CONDITIONS-FAIL"
    assert "f-32 FAIL witness=(0,0)" in result.stdout


def test_find_rep_guard(example_file: Path):
    result = runner.invoke(app, ["find-rep", str(example_file), "--max-base", "20"])
    assert result.exit_code == 2


def test_find_rep_constrained_order(example_file: Path):
    result = runner.invoke(app, ["find-rep", str(example_file), "--max-base", "2", "--order", "constrained"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "FOUND base=2"


def test_find_rep_rejects_unknown_order(example_file: Path):
    result = runner.invoke(app, ["find-rep", str(example_file), "--max-base", "2", "--order", "random"])
    assert result.exit_code == 2
    assert "FOUND" not in result.stdout


def test_sweep_base_one():
    first = runner.invoke(app, ["sweep", "--base", "1"])
    second = runner.invoke(app, ["sweep", "--base", "1"])
    assert first.exit_code == 0
    assert "dt-1" in first.stdout
    assert first.stdout == second.stdout


def test_sweep_base_two_is_reproducible():
    first = runner.invoke(app, ["sweep", "--base", "2"])
    second = runner.invoke(app, ["sweep", "--base", "2"])
    assert first.exit_code == 0
    assert "chi0-minimality" in first.stdout
    assert first.stdout == second.stdout


def test_sweep_writes_results(tmp_path: Path):
    out = tmp_path / "sweep.parquet"
    result = runner.invoke(app, ["sweep", "--base", "1", "--out", str(out)])
    assert result.exit_code == 0
    assert out.is_file()
