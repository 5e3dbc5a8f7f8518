"""
Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

import tempfile
import unittest
from pathlib import Path

import yaml

try:
    from ._env import ensure_test_env
except ImportError:
    from tests._env import ensure_test_env

ensure_test_env()

from config import config
from services.fixtures.reference_examples import KINDS, load_fixtures, verify_reference_examples


def _write(tmp: Path, payload) -> Path:
    path = tmp / "fixtures.yaml"
    path.write_text(yaml.safe_dump(payload, allow_unicode=True), encoding="utf-8")
    return path


class ReferenceExampleTests(unittest.TestCase):
    def test_bundled_fixtures_all_pass(self):
        report = verify_reference_examples()
        failures = [(o.name, o.error, o.diff) for o in report.outcomes if not o.passed]
        self.assertEqual(failures, [])
        self.assertTrue(report.all_passed)
        self.assertEqual(report.source, str(config.REFERENCE_FIXTURES_PATH))

    def test_every_bundled_kind_is_known(self):
        data = load_fixtures(config.REFERENCE_FIXTURES_PATH)
        self.assertTrue({entry["kind"] for entry in data["fixtures"]} <= set(KINDS))

    def test_only_filters_by_semigroup(self):
        report = verify_reference_examples(only=[16, 17, 35, 71])
        self.assertGreater(report.total, 0)
        self.assertTrue(all(o.semigroup == [16, 17, 35, 71] for o in report.outcomes))
        self.assertTrue(report.all_passed)

    def test_only_with_unknown_semigroup_is_not_a_pass(self):
        report = verify_reference_examples(only=[3, 5])
        self.assertEqual(report.total, 0)
        self.assertFalse(report.all_passed)

    def test_wrong_expectation_reports_diff(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = _write(
                Path(tmp),
                {
                    "semigroups": {"small": [3, 5]},
                    "fixtures": [
                        {"name": "ok", "semigroup": "small", "kind": "hilbert", "expected": "1,2,3, →"},
                        {"name": "bad", "semigroup": "small", "kind": "generators", "expected": [3, 7]},
                    ],
                },
            )
            report = verify_reference_examples(path)
        self.assertEqual((report.total, report.passed, report.failed), (2, 1, 1))
        bad = report.outcomes[1]
        self.assertEqual(bad.actual, [3, 5])
        self.assertIn("-  7", bad.diff)
        self.assertIn("+  5", bad.diff)

    def test_broken_entries_fail_individually(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = _write(
                Path(tmp),
                {
                    "fixtures": [
                        {"name": "unknown-kind", "semigroup": [3, 5], "kind": "nope", "expected": 1},
                        {"name": "unknown-alias", "semigroup": "missing", "kind": "generators", "expected": []},
                        {"name": "bad-level", "semigroup": [3, 5], "kind": "d_set", "args": {"level": 0}, "expected": []},
                        {"name": "fine", "semigroup": [3, 5], "kind": "order", "args": {"value": 10}, "expected": 2},
                        "not-a-mapping",
                    ]
                },
            )
            report = verify_reference_examples(path)
        self.assertEqual([o.passed for o in report.outcomes], [False, False, False, True, False])
        self.assertEqual(report.outcomes[4].name, "<malformed>")
        self.assertIn("Unknown kind", report.outcomes[0].error)
        self.assertIn("Unknown semigroup", report.outcomes[1].error)
        self.assertIsNotNone(report.outcomes[2].error)

    def test_malformed_file_is_rejected(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = _write(Path(tmp), {"not_fixtures": []})
            with self.assertRaises(ValueError):
                verify_reference_examples(path)


if __name__ == "__main__":
    unittest.main()
