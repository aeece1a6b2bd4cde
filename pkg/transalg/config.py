from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

_env_path = Path(__file__).resolve().parents[1] / ".env"
if _env_path.is_file():
    load_dotenv(_env_path, override=False)


def _flag(name: str, default: str) -> bool:
    return os.environ.get(name, default).lower() in ("true", "1", "yes")


@dataclass
class TransalgSettings:
    """Configuration loaded from TRANSALG_* environment variables.

    Parallelism and progress:
      TRANSALG_MAX_WORKERS=1
      TRANSALG_BATCH_SIZE=64
      TRANSALG_PROGRESS=false

    Bounds (enforced by the CLI with a message naming the limit):
      TRANSALG_MAX_ENUM_BASE=3
      TRANSALG_MINIMALITY_MAX_SIZE=4
      TRANSALG_SWEEP_MINIMALITY_MAX_SIZE=4
      TRANSALG_UNROLLED_MAX_N=2
      TRANSALG_SEARCH_GUARD=24
    """

    max_workers: int = 1
    batch_size: int = 64
    progress: bool = False

    max_enum_base: int = 3
    minimality_max_size: int = 4
    sweep_minimality_max_size: int = 4
    unrolled_max_n: int = 2
    # largest max_base * |G| accepted by find-rep
    search_guard: int = 24

    log_level: str = "INFO"


def load_settings() -> TransalgSettings:
    """Load settings from environment variables."""
    return TransalgSettings(
        max_workers=int(os.environ.get("TRANSALG_MAX_WORKERS", "1")),
        batch_size=int(os.environ.get("TRANSALG_BATCH_SIZE", "64")),
        progress=_flag("TRANSALG_PROGRESS", "false"),
        max_enum_base=int(os.environ.get("TRANSALG_MAX_ENUM_BASE", "3")),
        minimality_max_size=int(os.environ.get("TRANSALG_MINIMALITY_MAX_SIZE", "4")),
        sweep_minimality_max_size=int(os.environ.get("TRANSALG_SWEEP_MINIMALITY_MAX_SIZE", "4")),
        unrolled_max_n=int(os.environ.get("TRANSALG_UNROLLED_MAX_N", "2")),
        search_guard=int(os.environ.get("TRANSALG_SEARCH_GUARD", "24")),
        log_level=os.environ.get("TRANSALG_LOG_LEVEL", "INFO").upper(),
    )
