"""
Progress counters for the search harness. Counters live in the merging process only and are logged as `key=value` lines every SEARCH_PROGRESS_EVERY candidates.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
import threading

from config import config

logger = logging.getLogger(__name__)

_progress_lock = threading.Lock()
_search_processed_total = 0
_search_matched_total = 0


def reset_search_counters() -> None:
    global _search_processed_total, _search_matched_total
    with _progress_lock:
        _search_processed_total = 0
        _search_matched_total = 0


def record_partition(partition: int, processed: int, matched: int) -> None:
    global _search_processed_total, _search_matched_total
    with _progress_lock:
        before = _search_processed_total
        _search_processed_total += processed
        _search_matched_total += matched
        total = _search_processed_total
        hits = _search_matched_total
    every = config.SEARCH_PROGRESS_EVERY
    if total // every > before // every:
        logger.info("search_progress processed=%s matched=%s partition=%s", total, hits, partition)
