"""
Pydantic models for the exhaustive search harness: the constraints describing a bounded family of semigroups, one record per semigroup that matches the chosen predicate and the summary printed after the run.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Predicate(str, Enum):
    DECREASING = "decreasing"
    DH_BOUND_FAILS = "dh_bound_fails"
    CERTIFICATE_IS_DIRECT = "certificate_is_direct"
    ALL = "all"


class SearchConstraints(BaseModel):
    max_multiplicity: int = Field(..., ge=1)
    ed_min: int = Field(2, ge=1, description="1 admits only the semigroup of all naturals")
    ed_max: int = Field(..., ge=1)
    max_frobenius: Optional[int] = Field(None, ge=-1)
    max_generator: Optional[int] = Field(None, ge=1)
    symmetric_only: bool = False
    predicate: Predicate = Predicate.DECREASING

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_ranges(self) -> "SearchConstraints":
        if self.ed_min > self.ed_max:
            raise ValueError(f"ed_min={self.ed_min} exceeds ed_max={self.ed_max}")
        if self.ed_min > self.max_multiplicity:
            # embedding dimension never exceeds multiplicity
            raise ValueError(f"ed_min={self.ed_min} exceeds max_multiplicity={self.max_multiplicity}")
        return self


class MatchingDiagnostic(BaseModel):
    d_size: int
    matched: int


class SearchRecord(BaseModel):
    generators: List[int]
    key: str
    multiplicity: int
    ed: int
    frobenius: int
    r: int
    nondecreasing: bool
    certificate: str
    first_decrease: Optional[int] = None
    c2_count: int
    c_chain_ok: int
    ed45_small_mult: bool
    partition: int
    diagnostic_matching: Optional[Dict[str, MatchingDiagnostic]] = None
    wall_time: Optional[float] = Field(None, description="Seconds spent on this candidate; only with --timings")


class SearchSummary(BaseModel):
    processed: int = 0
    matched: int = 0
    decreasing: int = 0
    by_certificate: Dict[str, int] = Field(default_factory=dict)
    decreasing_keys: List[str] = Field(default_factory=list)
    partitions_total: int = 0
    partitions_done: int = 0
    resume_key: Optional[int] = Field(None, description="Last partition index fully written; pass to --resume-from")
    interrupted: bool = False
