"""Batched parallel evaluation with progress and deterministic result order."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class ParallelOptions:
    """Options for parallel evaluation."""

    max_workers: int = 1
    batch_size: int = 64
    progress: bool = False
    desc: str = "evaluate"


def _progress_bar(total: int, options: ParallelOptions):
    if not options.progress:
        return None
    try:
        from tqdm import tqdm
    except ImportError:
        return None
    return tqdm(total=total, unit="item", unit_scale=False, desc=options.desc)


def parallel_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    options: Optional[ParallelOptions] = None,
) -> list[R]:
    """Apply `fn` to every item, batch by batch, and return results in input order.

    With max_workers <= 1 items are evaluated inline. The first exception (by
    input position) is re-raised once its batch has drained.
    """
    opts = options or ParallelOptions()
    items_list = list(items)
    if not items_list:
        return []

    results: list[Optional[R]] = [None] * len(items_list)
    pbar = _progress_bar(len(items_list), opts)

    def _process_batch(start: int, batch: list[T]) -> None:
        if opts.max_workers <= 1:
            for offset, it in enumerate(batch):
                results[start + offset] = fn(it)
                if pbar:
                    pbar.update(1)
            return
        errors: dict[int, BaseException] = {}
        with ThreadPoolExecutor(max_workers=opts.max_workers) as ex:
            futures = {ex.submit(fn, it): start + offset for offset, it in enumerate(batch)}
            for fut in as_completed(futures):
                idx = futures[fut]
                try:
                    results[idx] = fut.result()
                except Exception as exc:
                    logger.error("Evaluation of item %d failed: %s", idx, exc)
                    errors[idx] = exc
                if pbar:
                    pbar.update(1)
        if errors:
            raise errors[min(errors)]

    try:
        for start in range(0, len(items_list), max(1, opts.batch_size)):
            _process_batch(start, items_list[start : start + max(1, opts.batch_size)])
    finally:
        if pbar:
            pbar.close()

    return results  # type: ignore[return-value]
