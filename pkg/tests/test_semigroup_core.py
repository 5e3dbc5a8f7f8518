"""
Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

import unittest

from hypothesis import given, settings

try:
    from ._env import ensure_test_env
except ImportError:
    from tests._env import ensure_test_env

ensure_test_env()

from services.semigroups.core import (
    apery_by_residue,
    apery_set,
    contains,
    is_symmetric,
    make_semigroup,
    minimal_generators,
    order,
    parse_semigroup,
)
from services.semigroups.errors import InvalidGeneratorsError, NotInSemigroupError, SemigroupError
from tests.oracles import brute_apery, brute_members, brute_orders, small_semigroups


class SemigroupConstructionTests(unittest.TestCase):
    def test_reduces_to_minimal_generators(self):
        s = make_semigroup([5, 3, 3, 9])
        self.assertEqual(s.generators, (3, 5))
        self.assertEqual(s.multiplicity, 3)
        self.assertEqual(s.embedding_dimension, 2)
        self.assertEqual(s.key, "3,5")
        self.assertEqual(str(s), "<3,5>")

    def test_large_generator_set_is_kept(self):
        s = make_semigroup([24, 25, 36, 51, 54])
        self.assertEqual(s.generators, (24, 25, 36, 51, 54))
        self.assertEqual(s.multiplicity, 24)

    def test_redundant_generator_and_frobenius(self):
        self.assertEqual(make_semigroup([2, 3, 4]).generators, (2, 3))
        s = make_semigroup([6, 10, 15])
        self.assertEqual(s.generators, (6, 10, 15))
        self.assertEqual(s.frobenius, 29)

    def test_minimal_generators_drops_sums(self):
        self.assertEqual(minimal_generators([4, 6, 9, 10]), (4, 6, 9))
        self.assertEqual(minimal_generators([3, 6, 7, 14]), (3, 7))

    def test_rejects_invalid_generator_sets(self):
        with self.assertRaises(InvalidGeneratorsError):
            make_semigroup([])
        with self.assertRaises(InvalidGeneratorsError):
            make_semigroup([0, 1])
        with self.assertRaises(InvalidGeneratorsError):
            make_semigroup([4, 6])
        with self.assertRaises(InvalidGeneratorsError):
            make_semigroup([2, 2**62 + 1])

    def test_invalid_generators_are_value_errors(self):
        with self.assertRaises(ValueError):
            make_semigroup([6, 9, 15])
        self.assertTrue(issubclass(InvalidGeneratorsError, SemigroupError))

    def test_parse_accepts_json_and_key_forms(self):
        self.assertEqual(parse_semigroup("[24,25,36]").generators, (24, 25, 36))
        self.assertEqual(parse_semigroup(" 24, 25 ,36 ").generators, (24, 25, 36))
        with self.assertRaises(InvalidGeneratorsError):
            parse_semigroup("24;25")
        with self.assertRaises(InvalidGeneratorsError):
            parse_semigroup('["a"]')


class SemigroupArithmeticTests(unittest.TestCase):
    def test_two_generated_apery_and_frobenius(self):
        s = make_semigroup([3, 5])
        self.assertEqual(apery_set(s), [0, 10, 5])
        self.assertEqual(s.frobenius, 7)
        self.assertEqual(s.genus, 4)
        self.assertEqual(s.gaps(), [1, 2, 4, 7])

    def test_naturals(self):
        s = make_semigroup([1])
        self.assertEqual(s.generators, (1,))
        self.assertEqual(apery_set(s), [0])
        self.assertEqual(s.frobenius, -1)
        self.assertEqual(s.gaps(), [])
        self.assertEqual(order(s, 7), 7)

    def test_contains(self):
        s = make_semigroup([3, 5])
        self.assertFalse(contains(s, 7))
        self.assertTrue(contains(s, 8))
        self.assertTrue(contains(s, 0))
        self.assertFalse(contains(s, -1))

    def test_order(self):
        s = make_semigroup([3, 5])
        self.assertEqual(order(s, 0), 0)
        self.assertEqual(order(s, 8), 2)
        self.assertEqual(order(s, 15), 5)
        self.assertEqual(order(s, 1000), 332)
        with self.assertRaises(NotInSemigroupError):
            order(s, 7)

    def test_reference_order(self):
        self.assertEqual(order(make_semigroup([24, 25, 36, 51, 54]), 126), 4)

    def test_symmetry(self):
        self.assertTrue(is_symmetric(make_semigroup([3, 5])))
        self.assertTrue(is_symmetric(make_semigroup([2, 7])))
        self.assertFalse(is_symmetric(make_semigroup([3, 4, 5])))
        self.assertTrue(is_symmetric(make_semigroup([1])))

    def test_apery_by_residue_against_other_modulus(self):
        # blow-up of <3,5> is <2,3>; its elements least in each class mod 3
        self.assertEqual(apery_by_residue([2, 3], 3), [0, 4, 2])

    def test_to_json(self):
        self.assertEqual(make_semigroup([5, 3]).to_json(), "[3, 5]")


@settings(max_examples=200, deadline=None)
@given(small_semigroups())
def test_membership_order_and_apery_match_brute_force(generators):
    s = make_semigroup(generators)
    limit = max(s.frobenius, 0) + 3 * s.multiplicity
    members = brute_members(generators, limit)
    orders = brute_orders(generators, limit)
    assert apery_set(s) == brute_apery(generators, limit)
    for value in range(limit + 1):
        assert s.contains(value) == members[value]
        if members[value]:
            assert s.order(value) == orders[value]


@settings(max_examples=100, deadline=None)
@given(small_semigroups())
def test_symmetric_iff_genus_is_half_of_frobenius_plus_one(generators):
    s = make_semigroup(generators)
    assert is_symmetric(s) == (2 * s.genus == s.frobenius + 1)


if __name__ == "__main__":
    unittest.main()
