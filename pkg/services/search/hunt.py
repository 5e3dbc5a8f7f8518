"""
Parallel search over a bounded family of semigroups. Each (g1, g2) partition is processed independently by a worker that certifies every candidate, builds its necessary-condition report and keeps the records matching the predicate. The merger consumes partition results in partition order, so the record stream is identical for any worker count.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from models.search.search import MatchingDiagnostic, Predicate, SearchConstraints, SearchRecord, SearchSummary
from models.semigroups.reports import Certificate
from services.common.workers import cap_workers
from services.search.enumeration import Partition, enumerate_partition, partitions
from services.search.observability import record_partition, reset_search_counters
from services.semigroups.core import NumericalSemigroup
from services.semigroups.errors import InvariantViolation
from services.semigroups.monotonicity import (
    Verdict,
    certify,
    d_sizes,
    necessary_report,
    necessary_violations,
)
from services.semigroups.representations import matching_bound

logger = logging.getLogger(__name__)


@dataclass
class PartitionResult:
    index: int
    processed: int = 0
    records: list[SearchRecord] = field(default_factory=list)
    by_certificate: dict[str, int] = field(default_factory=dict)
    decreasing_keys: list[str] = field(default_factory=list)


def _matches(predicate: Predicate, semigroup: NumericalSemigroup, verdict: Verdict) -> bool:
    if predicate is Predicate.ALL:
        return True
    if predicate is Predicate.DECREASING:
        return not verdict.nondecreasing
    if predicate is Predicate.CERTIFICATE_IS_DIRECT:
        return verdict.certificate is Certificate.DIRECT
    return any(size > h + 1 for h, size in d_sizes(semigroup).items())


def _diagnostic(semigroup: NumericalSemigroup) -> dict[str, MatchingDiagnostic]:
    return {
        str(h): MatchingDiagnostic(d_size=size, matched=matching_bound(semigroup, h))
        for h, size in d_sizes(semigroup).items()
        if size > h + 1
    }


def _record(
    semigroup: NumericalSemigroup,
    verdict: Verdict,
    index: int,
    predicate: Predicate,
    started: Optional[float],
) -> SearchRecord:
    report = necessary_report(semigroup)
    violations = necessary_violations(report, verdict.first_decrease)
    if violations:
        raise InvariantViolation(f"{semigroup} decreases but violates {violations}")
    return SearchRecord(
        generators=list(semigroup.generators),
        key=semigroup.key,
        multiplicity=semigroup.multiplicity,
        ed=semigroup.embedding_dimension,
        frobenius=semigroup.frobenius,
        r=semigroup.levels.reduction_number,
        nondecreasing=verdict.nondecreasing,
        certificate=verdict.certificate.value,
        first_decrease=verdict.first_decrease,
        c2_count=report.c2_count,
        c_chain_ok=report.c_chain_ok,
        ed45_small_mult=report.ed45_small_mult,
        partition=index,
        diagnostic_matching=_diagnostic(semigroup) if predicate is Predicate.DH_BOUND_FAILS else None,
        wall_time=None if started is None else round(time.perf_counter() - started, 6),
    )


def process_partition(args: tuple[SearchConstraints, Partition, int, bool]) -> PartitionResult:
    constraints, partition, index, timings = args
    result = PartitionResult(index=index)
    for semigroup in enumerate_partition(constraints, partition):
        started = time.perf_counter() if timings else None
        verdict = certify(semigroup)
        result.processed += 1
        name = verdict.certificate.value
        result.by_certificate[name] = result.by_certificate.get(name, 0) + 1
        if not verdict.nondecreasing:
            result.decreasing_keys.append(semigroup.key)
        if _matches(constraints.predicate, semigroup, verdict):
            result.records.append(_record(semigroup, verdict, index, constraints.predicate, started))
    return result


def _results(
    jobs: list[tuple[SearchConstraints, Partition, int, bool]],
    workers: int,
    executor: Optional[ProcessPoolExecutor],
) -> Iterator[PartitionResult]:
    if executor is None or workers == 1:
        for job in jobs:
            yield process_partition(job)
        return
    # map yields in submission order, which is partition order
    yield from executor.map(process_partition, jobs)


def hunt(
    constraints: SearchConstraints,
    workers: Optional[int],
    on_record: Callable[[SearchRecord], None],
    resume_from: Optional[int] = None,
    timings: bool = False,
) -> SearchSummary:
    resolved = cap_workers(workers)
    all_partitions = partitions(constraints)
    start = -1 if resume_from is None else resume_from
    jobs = [(constraints, p, i, timings) for i, p in enumerate(all_partitions) if i > start]
    summary = SearchSummary(partitions_total=len(all_partitions), resume_key=resume_from)
    reset_search_counters()
    logger.info(
        "search_start partitions=%s pending=%s workers=%s predicate=%s",
        len(all_partitions),
        len(jobs),
        resolved,
        constraints.predicate.value,
    )

    executor = ProcessPoolExecutor(max_workers=resolved) if resolved > 1 and len(jobs) > 1 else None
    try:
        for result in _results(jobs, resolved, executor):
            for record in result.records:
                on_record(record)
            summary.processed += result.processed
            summary.matched += len(result.records)
            summary.decreasing += len(result.decreasing_keys)
            summary.decreasing_keys.extend(result.decreasing_keys)
            for name, count in result.by_certificate.items():
                summary.by_certificate[name] = summary.by_certificate.get(name, 0) + count
            summary.partitions_done += 1
            summary.resume_key = result.index
            record_partition(result.index, result.processed, len(result.records))
    except KeyboardInterrupt:
        summary.interrupted = True
        logger.warning("search_interrupted resume_key=%s", summary.resume_key)
        if executor is not None:
            executor.shutdown(wait=False, cancel_futures=True)
            executor = None
    finally:
        if executor is not None:
            executor.shutdown()

    summary.by_certificate = dict(sorted(summary.by_certificate.items()))
    logger.info(
        "search_done processed=%s matched=%s decreasing=%s interrupted=%s",
        summary.processed,
        summary.matched,
        summary.decreasing,
        summary.interrupted,
    )
    return summary
