"""
Pydantic models for the golden-fixture replay report.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

from typing import Any, List, Optional

from pydantic import BaseModel, Field


class FixtureOutcome(BaseModel):
    name: str
    semigroup: List[int] = Field(default_factory=list)
    kind: str
    passed: bool
    expected: Any = None
    actual: Any = None
    diff: Optional[str] = None
    error: Optional[str] = None


class FixtureReport(BaseModel):
    source: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    outcomes: List[FixtureOutcome] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0 and self.total > 0
