"""
Pydantic models for the JSON reports printed by the command-line interface: per-residue Apéry rows, the filtration summary, monotonicity verdicts, necessary-condition diagnostics and injection replays.

Level-indexed maps (D_h, C_h, |D_h|) are written with string keys since JSON objects cannot carry integer keys.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from custom_types.json import JSONDict


class Certificate(str, Enum):
    CM_TANGENT_CONE = "CMTangentCone"
    APERY_BOUND = "AperyBound"
    DH_BOUND = "DhBound"
    DIRECT = "Direct"


class AbcRowModel(BaseModel):
    residue: int
    omega: int
    omega_prime: int
    a: int
    b: int
    c: int


class AperyReport(BaseModel):
    semigroup: List[int]
    apery: List[int]
    frobenius: int
    genus: int
    abc: List[AbcRowModel] = Field(default_factory=list)
    bad_residues: List[int] = Field(default_factory=list)
    tangent_cone_cm: bool


class FiltrationReport(BaseModel):
    hilbert: List[int]
    hilbert_display: str = Field(..., description="Sequence cut at its final constant run, e.g. `1,2,3, →`")
    r: int = Field(..., description="Reduction number")
    D: Dict[str, List[int]] = Field(default_factory=dict)
    C: Dict[str, List[int]] = Field(default_factory=dict)
    first_decrease: Optional[int] = None
    counting_residuals: Dict[str, int] = Field(default_factory=dict)


class VerdictModel(BaseModel):
    semigroup: List[int]
    nondecreasing: bool
    certificate: Certificate
    first_decrease: Optional[int] = None
    evidence: JSONDict = Field(default_factory=dict)

    model_config = ConfigDict(use_enum_values=True)


class NecessaryReportModel(BaseModel):
    c2_count: int
    c_chain_ok: int
    ed: int
    ed45_small_mult: bool
    shortcut_nondecreasing: bool


class InjectionStepModel(BaseModel):
    step: int
    label: str
    block: int
    tie_index: int
    preimage: int
    partner: int
    replaced: int
    generator: int
    before: str
    after: str
    rule: str = Field(..., description="`nested` keeps the image inside a maximal representation, `loose` only avoids the current image")


class TieFailureModel(BaseModel):
    tie_index: int
    preimages: List[int]
    image: str
    image_value: int
    label: str
    reason: str


class InjectionReport(BaseModel):
    semigroup: List[int]
    level: int
    status: str
    domain: List[int] = Field(default_factory=list)
    initial_images: Dict[str, str] = Field(default_factory=dict)
    images: Dict[str, str] = Field(default_factory=dict)
    assignment: Dict[str, int] = Field(default_factory=dict)
    blocks: int = 0
    trace: Optional[List[InjectionStepModel]] = None
    failure: Optional[TieFailureModel] = None


class AnalysisReport(BaseModel):
    semigroup: List[int]
    multiplicity: int
    embedding_dimension: int
    frobenius: int
    genus: int
    symmetric: bool
    apery: List[int]
    filtration: FiltrationReport
    abc: List[AbcRowModel] = Field(default_factory=list)
    verdict: VerdictModel
    necessary: NecessaryReportModel
