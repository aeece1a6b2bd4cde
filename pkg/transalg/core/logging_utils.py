from __future__ import annotations

import logging


def get_logger(name: str) -> logging.Logger:
    """Return a module logger; the root handler writes to stderr so stdout stays clean."""
    logger = logging.getLogger(name)
    if not logging.getLogger().handlers:
        from transalg.config import load_settings

        logging.basicConfig(
            level=load_settings().log_level,
            format="%(asctime)s %(levelname)s %(name)s - %(message)s",
        )
    return logger
