"""
Configuration management for BeMonotone, loading settings from environment variables with defaults, type conversion and validation. This module defines a `Config` class that encapsulates the tunables of the semigroup engine (how many levels past the reduction number are tabulated, how many maximal representations may be enumerated per element), of the exhaustive search harness (worker cap, progress logging cadence) and of the golden-fixture replay (location of the fixture file). Invalid values abort startup with a `ValueError` so a misconfigured sweep never runs half-way.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

import logging
import os
from pathlib import Path
from typing import Optional

import psutil

logger = logging.getLogger(__name__)

DEFAULT_FIXTURES_PATH = Path(__file__).resolve().parent / "services" / "fixtures" / "reference_examples.yaml"
ALLOWED_LOG_LEVELS: frozenset[str] = frozenset({"debug", "info", "warning", "error", "critical"})


def _to_bool(value: Optional[str], default: bool = False) -> bool:
    if value is None:
        return default
    return str(value).strip().lower() in ("1", "true", "yes", "on")


def _to_int(value: Optional[str], default: int) -> int:
    if value is None or not str(value).strip():
        return default
    try:
        return int(str(value).strip())
    except ValueError as exc:
        raise ValueError(f"Expected an integer, got {value!r}") from exc


def _default_workers() -> int:
    physical = psutil.cpu_count(logical=False)
    if physical:
        return int(physical)
    return int(os.cpu_count() or 1)


class Config:
    def __init__(self) -> None:
        self.LOG_LEVEL: str = os.getenv("LOG_LEVEL", "info").strip().lower()

        self.LEVEL_MARGIN: int = _to_int(os.getenv("LEVEL_MARGIN"), 6)
        self.MAX_REPRESENTATIONS: int = _to_int(os.getenv("MAX_REPRESENTATIONS"), 100000)

        self.SEARCH_MAX_WORKERS: int = _to_int(os.getenv("SEARCH_MAX_WORKERS"), _default_workers())
        self.SEARCH_PROGRESS_EVERY: int = _to_int(os.getenv("SEARCH_PROGRESS_EVERY"), 5000)
        self.SEARCH_VERIFY_MINIMALITY: bool = _to_bool(os.getenv("SEARCH_VERIFY_MINIMALITY"), default=False)

        self.REFERENCE_FIXTURES_PATH: Path = Path(
            os.getenv("REFERENCE_FIXTURES_PATH", str(DEFAULT_FIXTURES_PATH))
        )

        self.validate()

    def validate(self) -> None:
        if self.LOG_LEVEL not in ALLOWED_LOG_LEVELS:
            raise ValueError(
                f"Unsupported LOG_LEVEL '{self.LOG_LEVEL}'. Allowed values: {sorted(ALLOWED_LOG_LEVELS)}"
            )
        if self.LEVEL_MARGIN < 1:
            raise ValueError("LEVEL_MARGIN must be at least 1")
        if self.MAX_REPRESENTATIONS <= 0:
            raise ValueError("MAX_REPRESENTATIONS must be greater than 0")
        if self.SEARCH_MAX_WORKERS < 1:
            raise ValueError("SEARCH_MAX_WORKERS must be at least 1")
        if self.SEARCH_PROGRESS_EVERY <= 0:
            raise ValueError("SEARCH_PROGRESS_EVERY must be greater than 0")
        if self.SEARCH_VERIFY_MINIMALITY:
            logger.warning("SEARCH_VERIFY_MINIMALITY is enabled; enumeration will re-check every candidate")


config = Config()
