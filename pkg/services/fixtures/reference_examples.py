"""
Replays the golden values stored in `reference_examples.yaml` against the semigroup engine and reports pass or fail per fixture, with a line diff of expected against actual values for every failure.

A fixture names a semigroup alias, a `kind` selecting the computation, optional `args` and the `expected` value in plain JSON form. A broken fixture (unknown kind, unknown semigroup, computation error) fails on its own without stopping the replay.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import difflib
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, Optional

import yaml

from config import config
from custom_types.json import is_json_object
from models.semigroups.fixtures import FixtureOutcome, FixtureReport
from services.semigroups.core import NumericalSemigroup, make_semigroup
from services.semigroups.filtration import c_set, d_set, first_decrease, format_hilbert, level_set
from services.semigroups.invariants import skip_witness, tangent_cone_is_cm
from services.semigroups.monotonicity import certify
from services.semigroups.representations import (
    build_injection,
    lex_greatest_maximal_rep,
    maximal_representations,
    psi_map,
)
from services.semigroups.serializers import injection_to_pydantic

logger = logging.getLogger(__name__)

Args = dict[str, Any]


def _hilbert(s: NumericalSemigroup, _: Args) -> Any:
    return format_hilbert(list(s.levels.hilbert), s.multiplicity)


def _injection(s: NumericalSemigroup, args: Args) -> Any:
    report = injection_to_pydantic(s, build_injection(s, int(args["level"])), with_trace=True)
    payload: dict[str, Any] = {"status": report.status}
    if report.failure is None:
        payload["blocks"] = report.blocks
        payload["assignment"] = report.assignment
        payload["trace"] = [step.label for step in report.trace or []]
    else:
        payload["failure"] = {
            "label": report.failure.label,
            "preimages": report.failure.preimages,
            "image_value": report.failure.image_value,
        }
    return payload


def _certificate(s: NumericalSemigroup, _: Args) -> Any:
    verdict = certify(s)
    return {"nondecreasing": verdict.nondecreasing, "certificate": verdict.certificate.value}


def _level_difference(s: NumericalSemigroup, args: Args) -> Any:
    h = int(args["level"])
    return len(level_set(s, h)) - len(level_set(s, h - 1))


def _includes(s: NumericalSemigroup, args: Args) -> Any:
    wanted = [int(c) for c in args["coeffs"]]
    return any(list(rep.coeffs) == wanted for rep in maximal_representations(s, int(args["value"])))


KINDS: dict[str, Callable[[NumericalSemigroup, Args], Any]] = {
    "generators": lambda s, _: list(s.generators),
    "hilbert": _hilbert,
    "hilbert_value": lambda s, a: s.levels.hilbert[int(a["level"])],
    "order": lambda s, a: s.order(int(a["value"])),
    "level_size": lambda s, a: len(level_set(s, int(a["level"]))),
    "level_difference": _level_difference,
    "d_set": lambda s, a: d_set(s, int(a["level"])),
    "d_sizes": lambda s, a: [len(d_set(s, int(h))) for h in a["levels"]],
    "c_set": lambda s, a: c_set(s, int(a["level"])),
    "c_set_size": lambda s, a: len(c_set(s, int(a["level"]))),
    "first_decrease": lambda s, _: first_decrease(s),
    "skip_witness": lambda s, a: skip_witness(s, int(a["residue"])),
    "tangent_cone_cm": lambda s, _: tangent_cone_is_cm(s),
    "maximal_representations": lambda s, a: [list(r.coeffs) for r in maximal_representations(s, int(a["value"]))],
    "maximal_representation_includes": _includes,
    "lex_greatest": lambda s, a: list(lex_greatest_maximal_rep(s, int(a["value"])).coeffs),
    "psi": lambda s, a: psi_map(s, int(a["level"]), int(a["value"])),
    "injection": _injection,
    "certificate": _certificate,
    "embedding_dimension": lambda s, _: s.embedding_dimension,
}


def _diff(expected: Any, actual: Any) -> str:
    left = json.dumps(expected, indent=2, sort_keys=True, ensure_ascii=False).splitlines()
    right = json.dumps(actual, indent=2, sort_keys=True, ensure_ascii=False).splitlines()
    return "\n".join(difflib.unified_diff(left, right, "expected", "actual", lineterm=""))


def load_fixtures(path: Path) -> dict[str, Any]:
    with path.open("r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    if not isinstance(data, dict) or not isinstance(data.get("fixtures"), list):
        raise ValueError(f"Fixture file {path} must be a mapping with a 'fixtures' list")
    return data


def _generators_of(entry: Any, aliases: dict[str, Any]) -> Any:
    alias = entry.get("semigroup") if isinstance(entry, dict) else None
    return aliases.get(alias, alias) if isinstance(alias, str) else alias


def _run_one(entry: Any, aliases: dict[str, Any], cache: dict[str, NumericalSemigroup]) -> FixtureOutcome:
    if not is_json_object(entry):
        return FixtureOutcome(name="<malformed>", kind="?", passed=False, error=f"Fixture must be a JSON-like mapping, got {entry!r}")
    name = str(entry.get("name", "<unnamed>"))
    kind = str(entry.get("kind", ""))
    expected = entry.get("expected")
    generators = _generators_of(entry, aliases)
    if not isinstance(generators, list):
        return FixtureOutcome(
            name=name, kind=kind, passed=False, expected=expected, error=f"Unknown semigroup {entry.get('semigroup')!r}"
        )
    handler = KINDS.get(kind)
    if handler is None:
        return FixtureOutcome(
            name=name, semigroup=generators, kind=kind, passed=False, expected=expected, error=f"Unknown kind {kind!r}"
        )

    args: Args = dict(entry.get("args") or {})
    try:
        key = ",".join(str(g) for g in generators)
        if key not in cache:
            cache[key] = make_semigroup(generators)
        actual = handler(cache[key], args)
    except Exception as exc:  # pylint: disable=broad-exception-caught
        logger.warning("fixture_error name=%s error=%s", name, exc)
        return FixtureOutcome(
            name=name, semigroup=generators, kind=kind, passed=False, expected=expected, error=str(exc)
        )

    passed = actual == expected
    return FixtureOutcome(
        name=name,
        semigroup=generators,
        kind=kind,
        passed=passed,
        expected=expected,
        actual=actual,
        diff=None if passed else _diff(expected, actual),
    )


def verify_reference_examples(
    path: Optional[Path] = None,
    only: Optional[list[int]] = None,
) -> FixtureReport:
    """Replays every fixture, or only those whose semigroup has the generators in `only`."""
    source = path or config.REFERENCE_FIXTURES_PATH
    data = load_fixtures(source)
    aliases = dict(data.get("semigroups") or {})
    cache: dict[str, NumericalSemigroup] = {}
    report = FixtureReport(source=str(source))

    for entry in data["fixtures"]:
        if only is not None and _generators_of(entry, aliases) != list(only):
            continue
        outcome = _run_one(entry, aliases, cache)
        report.outcomes.append(outcome)
        report.total += 1
        if outcome.passed:
            report.passed += 1
        else:
            report.failed += 1
            logger.warning("fixture_failed name=%s kind=%s", outcome.name, outcome.kind)
    logger.info("fixtures_done total=%s passed=%s failed=%s", report.total, report.passed, report.failed)
    return report
