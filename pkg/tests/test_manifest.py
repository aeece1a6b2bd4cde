"""Tests for the sweep verdict table."""

from __future__ import annotations

from pathlib import Path

from transalg.core.manifest import Manifest


def _rows():
    return [
        {"system": "a", "size": 1, "invertible": False, "condition": "dt-1", "passed": True},
        {"system": "b", "size": 2, "invertible": False, "condition": "dt-1", "passed": False},
        {"system": "a", "size": 1, "invertible": False, "condition": "dt-2", "passed": True},
    ]


def test_summary_keeps_requested_order():
    summary = Manifest.from_rows(_rows()).summary(["dt-2", "dt-1", "dt-3"])
    assert summary["condition"].tolist() == ["dt-2", "dt-1", "dt-3"]
    assert summary["passed"].tolist() == [1, 1, 0]
    assert summary["total"].tolist() == [1, 2, 0]


def test_failures():
    failures = Manifest.from_rows(_rows()).failures()
    assert failures["system"].tolist() == ["b"]


def test_empty_summary():
    summary = Manifest.from_rows([]).summary(["dt-1"])
    assert summary["total"].tolist() == [0]


def test_parquet_round_trip(tmp_path: Path):
    m = Manifest.from_rows(_rows())
    path = tmp_path / "nested" / "m.parquet"
    m.save_parquet(path)
    assert Manifest.load_parquet(path).count() == 3
