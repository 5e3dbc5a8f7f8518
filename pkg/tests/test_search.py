"""
Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

import io
import json
import unittest
from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from pydantic import ValidationError

try:
    from ._env import ensure_test_env
except ImportError:
    from tests._env import ensure_test_env

ensure_test_env()

from config import config
from models.search.search import Predicate, SearchConstraints
from services.common.workers import cap_workers
from services.search import hunt as hunt_module
from services.search import observability
from services.search.enumeration import (
    enumerate_semigroups,
    enumeration_digest,
    generator_limit,
    partitions,
)
from services.search.hunt import hunt
from services.search.writers import CsvWriter, JsonlWriter, record_to_line, summary_to_line
from services.semigroups.core import is_symmetric, make_semigroup, minimal_generators
from services.semigroups.errors import SearchConstraintsError

S13 = [13, 19, 24, 44, 49, 54, 55, 59, 60, 66]


def _keys(constraints):
    return [s.key for s in enumerate_semigroups(constraints)]


def _brute_family(max_mult, ed_min, ed_max, max_gen):
    found = set()
    for size in range(1, ed_max + 1):
        for combo in combinations(range(1, max_gen + 1), size):
            if combo[0] > max_mult or reduce(gcd, combo) != 1:
                continue
            if minimal_generators(combo) == combo and ed_min <= len(combo):
                found.add(combo)
    return sorted(found)


class EnumerationTests(unittest.TestCase):
    def test_two_generated_family(self):
        constraints = SearchConstraints(max_multiplicity=3, ed_max=2, max_generator=10)
        self.assertEqual(
            _keys(constraints),
            ["2,3", "2,5", "2,7", "2,9", "3,4", "3,5", "3,7", "3,8", "3,10"],
        )

    def test_naturals_only(self):
        constraints = SearchConstraints(max_multiplicity=2, ed_min=1, ed_max=1, max_generator=10)
        self.assertEqual(_keys(constraints), ["1"])

    def test_symmetric_only(self):
        constraints = SearchConstraints(max_multiplicity=3, ed_max=2, max_generator=10, symmetric_only=True)
        self.assertEqual(len(_keys(constraints)), 9)

    def test_symmetric_filter_on_larger_family(self):
        plain = SearchConstraints(max_multiplicity=5, ed_max=4, max_generator=14)
        symmetric = plain.model_copy(update={"symmetric_only": True})
        expected = [s.key for s in enumerate_semigroups(plain) if is_symmetric(s)]
        self.assertEqual(_keys(symmetric), expected)
        self.assertLess(len(expected), len(_keys(plain)))

    def test_matches_brute_force_and_is_canonical(self):
        constraints = SearchConstraints(max_multiplicity=5, ed_max=4, max_generator=14)
        produced = [s.generators for s in enumerate_semigroups(constraints)]
        self.assertEqual(produced, sorted(produced))
        self.assertEqual(len(produced), len(set(produced)))
        self.assertEqual(produced, _brute_family(5, 2, 4, 14))

    def test_frobenius_bound(self):
        constraints = SearchConstraints(max_multiplicity=6, ed_max=6, max_frobenius=11)
        family = list(enumerate_semigroups(constraints))
        self.assertTrue(family)
        self.assertTrue(all(s.frobenius <= 11 for s in family))
        self.assertIn("6,7,8,9,10,11", [s.key for s in family])

    def test_generator_limit_and_unbounded_constraints(self):
        constraints = SearchConstraints(max_multiplicity=4, ed_max=3, max_generator=30, max_frobenius=10)
        self.assertEqual(generator_limit(constraints, 4), 14)
        with self.assertRaises(SearchConstraintsError):
            list(enumerate_semigroups(SearchConstraints(max_multiplicity=3, ed_max=2)))

    def test_partitions(self):
        constraints = SearchConstraints(max_multiplicity=3, ed_min=1, ed_max=2, max_generator=5)
        self.assertEqual(partitions(constraints), [(1,), (2, 3), (2, 5), (3, 4), (3, 5)])

    def test_constraint_validation(self):
        with self.assertRaises(ValidationError):
            SearchConstraints(max_multiplicity=0, ed_max=2, max_generator=5)
        with self.assertRaises(ValidationError):
            SearchConstraints(max_multiplicity=5, ed_min=4, ed_max=3, max_generator=5)
        with self.assertRaises(ValueError):
            SearchConstraints(max_multiplicity=2, ed_min=3, ed_max=3, max_generator=5)

    def test_digest_is_stable(self):
        constraints = SearchConstraints(max_multiplicity=5, ed_max=3, max_frobenius=15)
        self.assertEqual(enumeration_digest(constraints), enumeration_digest(constraints))

    def test_minimality_debug_mode(self):
        constraints = SearchConstraints(max_multiplicity=5, ed_max=4, max_generator=12)
        with pytest.MonkeyPatch.context() as ctx:
            ctx.setattr(config, "SEARCH_VERIFY_MINIMALITY", True)
            self.assertEqual(_keys(constraints), [s.key for s in enumerate_semigroups(constraints)])


class HuntTests(unittest.TestCase):
    def _run(self, constraints, workers, **kwargs):
        buffer = io.StringIO()
        writer = JsonlWriter(buffer)
        summary = hunt(constraints, workers, writer.write, **kwargs)
        return buffer.getvalue(), summary

    def test_worker_count_does_not_change_output(self):
        constraints = SearchConstraints(
            max_multiplicity=6, ed_max=4, max_frobenius=14, predicate=Predicate.ALL
        )
        single, summary_one = self._run(constraints, 1)
        double, summary_two = self._run(constraints, 2)
        self.assertEqual(single, double)
        self.assertEqual(summary_to_line(summary_one), summary_to_line(summary_two))
        self.assertEqual(summary_one.processed, summary_one.matched)
        self.assertEqual(summary_one.processed, len(single.splitlines()))
        self.assertEqual(sum(summary_one.by_certificate.values()), summary_one.processed)

    def test_no_decreasing_with_small_embedding_dimension(self):
        constraints = SearchConstraints(max_multiplicity=8, ed_max=3, max_frobenius=30)
        output, summary = self._run(constraints, 1)
        self.assertEqual(output, "")
        self.assertEqual(summary.decreasing, 0)
        self.assertGreater(summary.processed, 0)

    def test_decreasing_semigroup_is_reported(self):
        target = make_semigroup(S13)

        def fake_partition(constraints, partition):
            yield make_semigroup([3, 5])
            yield target

        constraints = SearchConstraints(max_multiplicity=3, ed_max=2, max_generator=5)
        with pytest.MonkeyPatch.context() as ctx:
            ctx.setattr(hunt_module, "enumerate_partition", fake_partition)
            output, summary = self._run(constraints, 1)
        records = [json.loads(line) for line in output.splitlines()]
        self.assertIn(target.key, [record["key"] for record in records])
        self.assertTrue(all(record["first_decrease"] == 2 for record in records))
        self.assertIn(target.key, summary.decreasing_keys)

    def test_resume_skips_finished_partitions(self):
        constraints = SearchConstraints(
            max_multiplicity=4, ed_max=3, max_generator=9, predicate=Predicate.ALL
        )
        full, summary = self._run(constraints, 1)
        resumed, resumed_summary = self._run(constraints, 1, resume_from=2)
        full_records = [json.loads(line) for line in full.splitlines()]
        expected = [line for line, record in zip(full.splitlines(), full_records) if record["partition"] > 2]
        self.assertEqual(resumed.splitlines(), expected)
        self.assertEqual(resumed_summary.resume_key, summary.resume_key)
        self.assertEqual(resumed_summary.partitions_done, summary.partitions_total - 3)

    def test_interrupt_keeps_partial_output(self):
        constraints = SearchConstraints(
            max_multiplicity=4, ed_max=3, max_generator=9, predicate=Predicate.ALL
        )
        calls = {"n": 0}
        original = hunt_module.process_partition

        def interrupted(args):
            calls["n"] += 1
            if calls["n"] == 3:
                raise KeyboardInterrupt
            return original(args)

        with pytest.MonkeyPatch.context() as ctx:
            ctx.setattr(hunt_module, "process_partition", interrupted)
            output, summary = self._run(constraints, 1)
        self.assertTrue(summary.interrupted)
        self.assertEqual(summary.resume_key, 1)
        self.assertEqual(summary.partitions_done, 2)
        self.assertTrue(all(json.loads(line)["partition"] <= 1 for line in output.splitlines()))

    def test_timings_are_opt_in(self):
        constraints = SearchConstraints(max_multiplicity=3, ed_max=2, max_generator=5, predicate=Predicate.ALL)
        plain, _ = self._run(constraints, 1)
        timed, _ = self._run(constraints, 1, timings=True)
        self.assertNotIn("wall_time", plain)
        self.assertTrue(all("wall_time" in json.loads(line) for line in timed.splitlines()))

    def test_dh_bound_predicate_attaches_matching_diagnostic(self):
        target = make_semigroup([16, 17, 35, 71])
        with pytest.MonkeyPatch.context() as ctx:
            ctx.setattr(hunt_module, "enumerate_partition", lambda constraints, partition: iter([target]))
            constraints = SearchConstraints(
                max_multiplicity=2, ed_max=2, max_generator=3, predicate=Predicate.DH_BOUND_FAILS
            )
            output, _ = self._run(constraints, 1)
        record = json.loads(output.splitlines()[0])
        self.assertEqual(record["certificate"], "Direct")
        self.assertEqual(record["diagnostic_matching"]["3"]["d_size"], 5)


class WriterTests(unittest.TestCase):
    def test_csv_columns(self):
        constraints = SearchConstraints(max_multiplicity=3, ed_max=2, max_generator=5, predicate=Predicate.ALL)
        buffer = io.StringIO()
        writer = CsvWriter(buffer)
        hunt(constraints, 1, writer.write)
        lines = buffer.getvalue().splitlines()
        self.assertEqual(lines[0], "generators,m,ed,f,r,certificate,first_decrease")
        self.assertEqual(lines[1], "2 3,2,2,1,1,CMTangentCone,")

    def test_record_line_is_compact_json(self):
        constraints = SearchConstraints(max_multiplicity=2, ed_max=2, max_generator=3, predicate=Predicate.ALL)
        records = []
        hunt(constraints, 1, records.append)
        line = record_to_line(records[0])
        self.assertNotIn(" ", line)
        self.assertEqual(json.loads(line)["key"], "2,3")


def test_cap_workers(monkeypatch):
    monkeypatch.setattr(config, "SEARCH_MAX_WORKERS", 4)
    assert cap_workers(None) == 4
    assert cap_workers(16) == 4
    assert cap_workers(0) == 1
    assert cap_workers(3) == 3


def test_progress_logged_when_crossing_boundary(monkeypatch, caplog):
    monkeypatch.setattr(config, "SEARCH_PROGRESS_EVERY", 10)
    observability.reset_search_counters()
    with caplog.at_level("INFO", logger="services.search.observability"):
        observability.record_partition(0, 6, 1)
        observability.record_partition(1, 6, 0)
    messages = [record.getMessage() for record in caplog.records]
    assert messages == ["search_progress processed=12 matched=1 partition=1"]
    observability.reset_search_counters()


if __name__ == "__main__":
    unittest.main()
