from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import pandas as pd

from transalg.config import TransalgSettings, load_settings
from transalg.core.errors import UsageError
from transalg.core.manifest import Manifest
from transalg.core.parallel import ParallelOptions, parallel_map
from transalg.maps.tsemi import enumerate_all, extract_abstract
from transalg.sweep.properties import PropertySpec, SweepItem, SweepLimits, list_properties

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepResult:
    manifest: Manifest
    conditions: list[str]

    @property
    def summary(self) -> pd.DataFrame:
        return self.manifest.summary(self.conditions)

    @property
    def passed(self) -> bool:
        return bool(self.manifest.df["passed"].all()) if self.manifest.count() else True

    def to_text(self) -> str:
        return self.summary.to_string(index=False)


def corpus_items(base_size: int, limits: SweepLimits) -> list[SweepItem]:
    """The ∩-closed corpus followed by its invertible-only counterpart."""
    items: list[SweepItem] = []
    for invertible in (False, True):
        for phi in enumerate_all(base_size, with_meet=True, invertible_only=invertible):
            items.append(SweepItem(len(items), phi, extract_abstract(phi), invertible, limits))
    return items


def _evaluate(item: SweepItem, properties: list[PropertySpec]) -> list[dict]:
    rows = []
    for prop in properties:
        if not prop.applies(item):
            continue
        passed = bool(prop.check(item))
        if not passed:
            logger.warning("%s failed on system %d (%s)", prop.name, item.index, item.system.name)
        rows.append({
            "system": item.system.name,
            "size": item.size,
            "invertible": item.invertible,
            "condition": prop.name,
            "passed": passed,
        })
    return rows


def run_sweep(
    base_size: int,
    settings: Optional[TransalgSettings] = None,
    properties: Optional[list[PropertySpec]] = None,
    out: Optional[Path] = None,
) -> SweepResult:
    """Evaluate every property on every corpus system of the given base.

    Rows are collected in corpus order regardless of parallelism, so the
    summary is identical across runs.
    """
    settings = settings or load_settings()
    if base_size > settings.max_enum_base:
        raise UsageError(f"--base {base_size} exceeds TRANSALG_MAX_ENUM_BASE={settings.max_enum_base}")
    if settings.sweep_minimality_max_size > settings.minimality_max_size:
        raise UsageError(
            f"TRANSALG_SWEEP_MINIMALITY_MAX_SIZE={settings.sweep_minimality_max_size} exceeds "
            f"TRANSALG_MINIMALITY_MAX_SIZE={settings.minimality_max_size}"
        )
    props = properties if properties is not None else list_properties()
    limits = SweepLimits(minimality_max_size=settings.sweep_minimality_max_size)

    items = corpus_items(base_size, limits)
    logger.info("Sweeping %d properties over %d systems on base %d", len(props), len(items), base_size)

    per_item = parallel_map(
        lambda it: _evaluate(it, props),
        items,
        ParallelOptions(
            max_workers=settings.max_workers,
            batch_size=settings.batch_size,
            progress=settings.progress,
            desc=f"sweep base {base_size}",
        ),
    )
    manifest = Manifest.from_rows([row for rows in per_item for row in rows])
    result = SweepResult(manifest, [p.name for p in props])

    failed = int((~manifest.df["passed"].astype(bool)).sum()) if manifest.count() else 0
    logger.info("Sweep finished: %d verdicts, %d failures", manifest.count(), failed)
    if out is not None:
        manifest.save_parquet(out)
        logger.info("Wrote sweep results to %s", out)
    return result
