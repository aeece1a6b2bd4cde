"""Tests for batched parallel evaluation."""

from __future__ import annotations

import pytest

from transalg.core.parallel import ParallelOptions, parallel_map


def test_inline_preserves_order():
    assert parallel_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]


def test_threads_preserve_order():
    opts = ParallelOptions(max_workers=4, batch_size=3)
    assert parallel_map(lambda x: x + 1, range(20), opts) == list(range(1, 21))


def test_empty():
    assert parallel_map(lambda x: x, [], ParallelOptions(max_workers=2)) == []


@pytest.mark.parametrize("workers", [1, 3])
def test_errors_propagate(workers: int):
    def boom(x: int) -> int:
        if x == 5:
            raise ValueError("bad item")
        return x

    with pytest.raises(ValueError, match="bad item"):
        parallel_map(boom, range(10), ParallelOptions(max_workers=workers, batch_size=4))


def test_progress_bar_does_not_change_results():
    opts = ParallelOptions(max_workers=2, batch_size=2, progress=True, desc="test")
    assert parallel_map(str, range(4), opts) == ["0", "1", "2", "3"]
