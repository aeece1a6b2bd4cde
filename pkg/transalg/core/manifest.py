from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import pandas as pd


@dataclass(frozen=True)
class Manifest:
    """Per-system verdict table of a corpus sweep.

    Convention:
      - one row per (system, condition)
      - columns: system, size, invertible, condition, passed
    """

    df: pd.DataFrame

    COLUMNS = ("system", "size", "invertible", "condition", "passed")

    @staticmethod
    def from_rows(rows: list[dict]) -> "Manifest":
        return Manifest(pd.DataFrame(rows, columns=list(Manifest.COLUMNS)))

    def save_parquet(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        self.df.to_parquet(path, index=False)

    @staticmethod
    def load_parquet(path: Path) -> "Manifest":
        return Manifest(pd.read_parquet(path))

    def count(self) -> int:
        return int(len(self.df))

    def summary(self, order: list[str]) -> pd.DataFrame:
        """Aggregate to one row per condition: passed / total, in the given order."""
        if self.df.empty:
            return pd.DataFrame({"condition": order, "passed": [0] * len(order), "total": [0] * len(order)})
        grouped = self.df.groupby("condition")["passed"].agg(["sum", "count"])
        rows = []
        for cond in order:
            if cond in grouped.index:
                rows.append({"condition": cond, "passed": int(grouped.at[cond, "sum"]), "total": int(grouped.at[cond, "count"])})
            else:
                rows.append({"condition": cond, "passed": 0, "total": 0})
        return pd.DataFrame(rows, columns=["condition", "passed", "total"])

    def failures(self) -> pd.DataFrame:
        return self.df[~self.df["passed"].astype(bool)]
