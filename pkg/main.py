"""
Entrypoint for the BeMonotone command-line tool.

Subcommands print JSON (or the Hilbert sequence in display form) on stdout; logs go to stderr. Exit codes: 0 success, 1 invalid input, 2 fixture failure, 3 internal invariant violation, 130 interrupted search.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from contextlib import ExitStack
from pathlib import Path
from typing import NoReturn, Optional

import yaml

from config import config
from middleware.error_handlers import EXIT_FIXTURE_FAILURE, EXIT_INVALID_INPUT, EXIT_OK, handle_cli_errors
from models.search.search import Predicate, SearchConstraints, SearchRecord
from services.fixtures.reference_examples import verify_reference_examples
from services.search.hunt import hunt
from services.search.writers import CsvWriter, JsonlWriter, summary_to_line
from services.semigroups.core import NumericalSemigroup, parse_semigroup
from services.semigroups.errors import InvalidLevelError
from services.semigroups.filtration import format_hilbert
from services.semigroups.invariants import abc_table
from services.semigroups.representations import build_injection
from services.semigroups.serializers import analysis_to_pydantic, apery_to_pydantic, injection_to_pydantic

logger = logging.getLogger("bemonotone")

EXIT_INTERRUPTED = 130


def configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _semigroup(tokens: Sequence[str]) -> NumericalSemigroup:
    parts = [part for token in tokens for part in token.split(",") if part.strip()]
    return parse_semigroup(",".join(parts))


@handle_cli_errors()
def cmd_analyze(args: argparse.Namespace) -> int:
    semigroup = _semigroup(args.generators)
    print(analysis_to_pydantic(semigroup).model_dump_json(indent=2))
    return EXIT_OK


@handle_cli_errors()
def cmd_hilbert(args: argparse.Namespace) -> int:
    semigroup = _semigroup(args.generators)
    print(format_hilbert(list(semigroup.levels.hilbert), semigroup.multiplicity))
    return EXIT_OK


@handle_cli_errors()
def cmd_apery(args: argparse.Namespace) -> int:
    semigroup = _semigroup(args.generators)
    print(apery_to_pydantic(semigroup, abc_table(semigroup)).model_dump_json(indent=2))
    return EXIT_OK


@handle_cli_errors()
def cmd_injection(args: argparse.Namespace) -> int:
    semigroup = _semigroup(args.generators)
    if args.all_levels:
        r = semigroup.levels.reduction_number
        reports = [
            injection_to_pydantic(semigroup, build_injection(semigroup, h), with_trace=args.trace).model_dump(mode="json")
            for h in range(2, r + 1)
        ]
        print(json.dumps(reports, indent=2, ensure_ascii=False))
        return EXIT_OK
    if args.level is None:
        raise InvalidLevelError("Pass --level H or --all-levels")
    result = build_injection(semigroup, args.level)
    print(injection_to_pydantic(semigroup, result, with_trace=args.trace).model_dump_json(indent=2))
    return EXIT_OK


@handle_cli_errors()
def cmd_search(args: argparse.Namespace) -> int:
    constraints = SearchConstraints(
        max_multiplicity=args.max_mult,
        ed_min=args.ed_min,
        ed_max=args.ed_max,
        max_frobenius=args.max_frob,
        max_generator=args.max_gen,
        symmetric_only=args.symmetric,
        predicate=Predicate(args.predicate),
    )
    with ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w", encoding="utf-8")) if args.out else sys.stdout
        jsonl = JsonlWriter(out)
        csv_writer = CsvWriter(stack.enter_context(open(args.csv, "w", encoding="utf-8", newline=""))) if args.csv else None

        def emit(record: SearchRecord) -> None:
            jsonl.write(record)
            if csv_writer is not None:
                csv_writer.write(record)

        summary = hunt(
            constraints,
            args.workers,
            emit,
            resume_from=args.resume_from,
            timings=args.timings,
        )
        out.flush()
    print(summary_to_line(summary))
    return EXIT_INTERRUPTED if summary.interrupted else EXIT_OK


@handle_cli_errors(invalid_input_exceptions=(ValueError, OSError, yaml.YAMLError))
def cmd_verify_examples(args: argparse.Namespace) -> int:
    only = list(_semigroup(args.only).generators) if args.only else None
    report = verify_reference_examples(Path(args.fixtures) if args.fixtures else None, only=only)
    print(report.model_dump_json(indent=2))
    return EXIT_OK if report.all_passed else EXIT_FIXTURE_FAILURE


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors are invalid input; exit code 2 stays reserved for fixture failures."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="bemonotone",
        description="Hilbert functions of numerical semigroup rings: certificates, injections and exhaustive search.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("analyze", cmd_analyze, "Full JSON report for one semigroup."),
        ("hilbert", cmd_hilbert, "Hilbert sequence, cut at its final constant run."),
        ("apery", cmd_apery, "Apéry set and the a/b/c invariants per residue."),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("generators", nargs="+", help="Generators, space or comma separated.")
        sub.set_defaults(handler=handler)

    injection = subparsers.add_parser("injection", help="Replay the injection of D_h into C_h.")
    injection.add_argument("generators", nargs="+")
    injection.add_argument("--level", type=int, default=None)
    injection.add_argument("--all-levels", action="store_true", help="Every level 2..r.")
    injection.add_argument("--trace", action="store_true")
    injection.set_defaults(handler=cmd_injection)

    search = subparsers.add_parser("search", help="Exhaustive search over a bounded family.")
    search.add_argument("--max-mult", type=int, required=True)
    search.add_argument("--ed-min", type=int, default=2)
    search.add_argument("--ed-max", type=int, required=True)
    search.add_argument("--max-gen", type=int, default=None)
    search.add_argument("--max-frob", type=int, default=None)
    search.add_argument("--symmetric", action="store_true")
    search.add_argument("--predicate", choices=[p.value for p in Predicate], default=Predicate.DECREASING.value)
    search.add_argument("--workers", type=int, default=None, help=f"Capped at SEARCH_MAX_WORKERS ({config.SEARCH_MAX_WORKERS}).")
    search.add_argument("--out", default=None, help="JSONL record file; stdout when omitted.")
    search.add_argument("--csv", default=None, help="CSV summary of the matched records.")
    search.add_argument("--resume-from", type=int, default=None, help="Skip partitions with index <= K.")
    search.add_argument("--timings", action="store_true", help="Add per-record wall time.")
    search.set_defaults(handler=cmd_search)

    verify = subparsers.add_parser("verify-paper", aliases=["verify-examples"], help="Replay the golden fixtures.")
    verify.add_argument("--fixtures", default=None, help="Fixture YAML; defaults to REFERENCE_FIXTURES_PATH.")
    verify.add_argument("--only", nargs="+", default=None, help="Restrict to fixtures of this semigroup.")
    verify.set_defaults(handler=cmd_verify_examples)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging()
    args = build_parser().parse_args(argv)
    return int(args.handler(args))


if __name__ == "__main__":
    raise SystemExit(main())
