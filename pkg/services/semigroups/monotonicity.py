"""
Certificates for a non-decreasing Hilbert function. Cheap sufficient criteria are tried first (Cohen-Macaulay tangent cone, at most three residues that skip a level, the level-wise bound |D_h| <= h+1) and only when none fires is the Hilbert sequence itself inspected. A separate report collects necessary conditions that every semigroup with a decreasing Hilbert function has to satisfy; the search harness uses it as a pre-filter and as a consistency check on its finds.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from custom_types.json import JSONDict, level_keyed
from models.semigroups.reports import Certificate
from services.semigroups.core import NumericalSemigroup
from services.semigroups.errors import InvariantViolation
from services.semigroups.filtration import c_set, d_set, first_decrease
from services.semigroups.invariants import AperyInvariants, abc_table

logger = logging.getLogger(__name__)

APERY_BOUND_LIMIT = 3
ED45_MULTIPLICITY_LIMIT = 8


@dataclass(frozen=True)
class Verdict:
    nondecreasing: bool
    certificate: Certificate
    first_decrease: Optional[int] = None
    evidence: JSONDict = field(default_factory=dict)


@dataclass(frozen=True)
class NecessaryReport:
    c2_count: int
    c_chain_ok: int
    ed: int
    ed45_small_mult: bool

    @property
    def shortcut_nondecreasing(self) -> bool:
        # a decreasing Hilbert function needs at least three Apéry elements of order 2
        return self.c2_count < 3


def d_sizes(semigroup: NumericalSemigroup) -> dict[int, int]:
    r = semigroup.levels.reduction_number
    return {h: len(d_set(semigroup, h)) for h in range(2, r + 1)}


def _validate(verdict: Verdict, table: AperyInvariants, sizes: Optional[dict[int, int]]) -> Verdict:
    if verdict.certificate is Certificate.CM_TANGENT_CONE and not table.is_cohen_macaulay:
        raise InvariantViolation("CMTangentCone certificate with a residue where a > b")
    if verdict.certificate is Certificate.APERY_BOUND and len(table.bad_residues) > APERY_BOUND_LIMIT:
        raise InvariantViolation("AperyBound certificate with more than three bad residues")
    if verdict.certificate is Certificate.DH_BOUND:
        if sizes is None or any(size > h + 1 for h, size in sizes.items()):
            raise InvariantViolation(f"DhBound certificate with |D_h| sizes {sizes}")
    if not verdict.nondecreasing and (
        verdict.certificate is not Certificate.DIRECT or verdict.first_decrease is None
    ):
        raise InvariantViolation("A decreasing verdict must be Direct and name the first decrease")
    return verdict


def certify(semigroup: NumericalSemigroup) -> Verdict:
    table = abc_table(semigroup)
    if table.is_cohen_macaulay:
        return _validate(
            Verdict(nondecreasing=True, certificate=Certificate.CM_TANGENT_CONE, evidence={"bad_residues": []}),
            table,
            None,
        )

    r = semigroup.levels.reduction_number
    bad = table.bad_residues
    if len(bad) <= APERY_BOUND_LIMIT:
        evidence: JSONDict = {
            "bad_residue_count": len(bad),
            "bad_residues": list(bad),
            "per_level_d_bound": level_keyed({h: min(len(bad), h + 1) for h in range(2, r + 1)}),
        }
        return _validate(
            Verdict(nondecreasing=True, certificate=Certificate.APERY_BOUND, evidence=evidence),
            table,
            None,
        )

    sizes = d_sizes(semigroup)
    if all(size <= h + 1 for h, size in sizes.items()):
        return _validate(
            Verdict(
                nondecreasing=True,
                certificate=Certificate.DH_BOUND,
                evidence={"d_sizes": level_keyed(sizes)},
            ),
            table,
            sizes,
        )

    decrease = first_decrease(semigroup)
    verdict = Verdict(
        nondecreasing=decrease is None,
        certificate=Certificate.DIRECT,
        first_decrease=decrease,
        evidence={"hilbert": list(semigroup.levels.hilbert), "d_sizes": level_keyed(sizes)},
    )
    if decrease is not None:
        logger.info("decreasing Hilbert function semigroup=%s first_decrease=%s", semigroup, decrease)
    return _validate(verdict, table, sizes)


def necessary_report(semigroup: NumericalSemigroup) -> NecessaryReport:
    table = abc_table(semigroup)
    r = semigroup.levels.reduction_number
    chain = 1
    for h in range(2, r + 1):
        if len(c_set(semigroup, h)) < h + 1:
            break
        chain = h
    ed = semigroup.embedding_dimension
    return NecessaryReport(
        c2_count=table.count_b(2),
        c_chain_ok=chain,
        ed=ed,
        ed45_small_mult=ed in (4, 5) and semigroup.multiplicity <= ED45_MULTIPLICITY_LIMIT,
    )


def necessary_violations(report: NecessaryReport, decrease: Optional[int]) -> list[str]:
    """Necessary conditions contradicted by a semigroup whose Hilbert function first drops at `decrease`."""
    if decrease is None:
        return []
    problems = []
    if report.c2_count < 3:
        problems.append(f"c2_count={report.c2_count} < 3")
    if report.c_chain_ok < decrease:
        problems.append(f"c_chain_ok={report.c_chain_ok} < first_decrease={decrease}")
    if decrease == 2 and report.ed <= 5:
        problems.append(f"decrease at h=2 with ed={report.ed} <= 5")
    if report.ed45_small_mult:
        problems.append("ed in {4,5} with multiplicity <= 8")
    return problems
