"""
Serializers converting the frozen dataclasses of the semigroup engine into the Pydantic report models printed by the command-line interface.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging

from custom_types.json import level_keyed
from models.semigroups.reports import (
    AbcRowModel,
    AnalysisReport,
    AperyReport,
    FiltrationReport,
    InjectionReport,
    InjectionStepModel,
    NecessaryReportModel,
    TieFailureModel,
    VerdictModel,
)
from services.semigroups.core import NumericalSemigroup, is_symmetric
from services.semigroups.filtration import counting_residuals, first_decrease, format_hilbert, level_sets
from services.semigroups.invariants import AperyInvariants, AperyRow, abc_table
from services.semigroups.monotonicity import NecessaryReport, Verdict, certify, necessary_report
from services.semigroups.representations import InjectionResult, InjectionStep, format_summands, psi_label

logger = logging.getLogger(__name__)


def abc_row_to_pydantic(row: AperyRow) -> AbcRowModel:
    return AbcRowModel(
        residue=row.residue,
        omega=row.omega,
        omega_prime=row.omega_prime,
        a=row.a,
        b=row.b,
        c=row.c,
    )


def apery_to_pydantic(semigroup: NumericalSemigroup, table: AperyInvariants) -> AperyReport:
    return AperyReport(
        semigroup=list(semigroup.generators),
        apery=list(semigroup.apery),
        frobenius=semigroup.frobenius,
        genus=semigroup.genus,
        abc=[abc_row_to_pydantic(row) for row in table.rows],
        bad_residues=table.bad_residues,
        tangent_cone_cm=table.is_cohen_macaulay,
    )


def filtration_to_pydantic(semigroup: NumericalSemigroup) -> FiltrationReport:
    table = semigroup.levels
    sets = level_sets(semigroup)
    return FiltrationReport(
        hilbert=list(table.hilbert),
        hilbert_display=format_hilbert(list(table.hilbert), semigroup.multiplicity),
        r=table.reduction_number,
        D=level_keyed(sets.d),
        C=level_keyed(sets.c),
        first_decrease=first_decrease(semigroup),
        counting_residuals=level_keyed(counting_residuals(semigroup)),
    )


def verdict_to_pydantic(semigroup: NumericalSemigroup, verdict: Verdict) -> VerdictModel:
    payload = {
        "semigroup": list(semigroup.generators),
        "nondecreasing": verdict.nondecreasing,
        "certificate": verdict.certificate.value,
        "first_decrease": verdict.first_decrease,
        "evidence": dict(verdict.evidence),
    }
    return VerdictModel.model_validate(payload)


def necessary_to_pydantic(report: NecessaryReport) -> NecessaryReportModel:
    return NecessaryReportModel(
        c2_count=report.c2_count,
        c_chain_ok=report.c_chain_ok,
        ed=report.ed,
        ed45_small_mult=report.ed45_small_mult,
        shortcut_nondecreasing=report.shortcut_nondecreasing,
    )


def _step_to_pydantic(step: InjectionStep) -> InjectionStepModel:
    return InjectionStepModel(
        step=step.step,
        label=f"{psi_label(step.step)}({step.preimage})",
        block=step.block,
        tie_index=step.tie_index,
        preimage=step.preimage,
        partner=step.partner,
        replaced=step.replaced,
        generator=step.generator,
        before=format_summands(step.before),
        after=format_summands(step.after),
        rule=step.rule,
    )


def injection_to_pydantic(
    semigroup: NumericalSemigroup,
    result: InjectionResult,
    with_trace: bool = False,
) -> InjectionReport:
    failure = None
    if result.failure_point is not None:
        point = result.failure_point
        failure = TieFailureModel(
            tie_index=point.tie_index,
            preimages=list(point.preimages),
            image=format_summands(point.image),
            image_value=sum(point.image),
            label=psi_label(point.step),
            reason=point.reason,
        )
    return InjectionReport(
        semigroup=list(semigroup.generators),
        level=result.level,
        status=result.status.value,
        domain=sorted(result.initial_images),
        initial_images=level_keyed({s: format_summands(v) for s, v in result.initial_images.items()}),
        images=level_keyed({s: format_summands(v) for s, v in result.images.items()}),
        assignment=level_keyed(result.assignment),
        blocks=result.blocks,
        trace=[_step_to_pydantic(step) for step in result.trace] if with_trace else None,
        failure=failure,
    )


def analysis_to_pydantic(semigroup: NumericalSemigroup) -> AnalysisReport:
    table = abc_table(semigroup)
    return AnalysisReport(
        semigroup=list(semigroup.generators),
        multiplicity=semigroup.multiplicity,
        embedding_dimension=semigroup.embedding_dimension,
        frobenius=semigroup.frobenius,
        genus=semigroup.genus,
        symmetric=is_symmetric(semigroup),
        apery=list(semigroup.apery),
        filtration=filtration_to_pydantic(semigroup),
        abc=[abc_row_to_pydantic(row) for row in table.rows],
        verdict=verdict_to_pydantic(semigroup, certify(semigroup)),
        necessary=necessary_to_pydantic(necessary_report(semigroup)),
    )
