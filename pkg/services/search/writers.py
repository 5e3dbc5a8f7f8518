"""
Output writers for search results: one JSON object per line for records and a CSV summary table.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import csv
import json
from typing import IO

from models.search.search import SearchRecord, SearchSummary

CSV_COLUMNS = ("generators", "m", "ed", "f", "r", "certificate", "first_decrease")


def record_to_line(record: SearchRecord) -> str:
    payload = record.model_dump(mode="json")
    if payload.get("wall_time") is None:
        payload.pop("wall_time", None)
    if payload.get("diagnostic_matching") is None:
        payload.pop("diagnostic_matching", None)
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def summary_to_line(summary: SearchSummary) -> str:
    return json.dumps({"summary": summary.model_dump(mode="json")}, separators=(",", ":"), ensure_ascii=False)


class JsonlWriter:
    def __init__(self, stream: IO[str]) -> None:
        self._stream = stream
        self.count = 0

    def write(self, record: SearchRecord) -> None:
        self._stream.write(record_to_line(record) + "\n")
        self.count += 1


class CsvWriter:
    def __init__(self, stream: IO[str]) -> None:
        self._writer = csv.writer(stream, lineterminator="\n")
        self._writer.writerow(CSV_COLUMNS)

    def write(self, record: SearchRecord) -> None:
        self._writer.writerow(
            (
                " ".join(str(g) for g in record.generators),
                record.multiplicity,
                record.ed,
                record.frobenius,
                record.r,
                record.certificate,
                "" if record.first_decrease is None else record.first_decrease,
            )
        )
