"""
Blow-up semigroup and the per-residue invariants a_i, b_i, c_i attached to the Apéry set, the Cohen-Macaulay test for the tangent cone and constructive witnesses of elements that skip a level.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from services.semigroups.core import NumericalSemigroup, apery_by_residue, make_semigroup
from services.semigroups.errors import InvalidLevelError, InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AperyRow:
    residue: int
    omega: int
    omega_prime: int
    a: int
    b: int
    c: int

    @property
    def skips(self) -> bool:
        return self.a > self.b


@dataclass(frozen=True)
class AperyInvariants:
    rows: tuple[AperyRow, ...]

    @property
    def bad_residues(self) -> list[int]:
        return [row.residue for row in self.rows if row.skips]

    @property
    def is_cohen_macaulay(self) -> bool:
        return not self.bad_residues

    def count_b(self, value: int) -> int:
        return sum(1 for row in self.rows if row.residue and row.b == value)


def blowup(semigroup: NumericalSemigroup) -> NumericalSemigroup:
    g1 = semigroup.multiplicity
    return make_semigroup([g1, *(g - g1 for g in semigroup.generators[1:])])


def blowup_chain(semigroup: NumericalSemigroup) -> list[NumericalSemigroup]:
    chain = [semigroup]
    while chain[-1].multiplicity > 1:
        chain.append(blowup(chain[-1]))
    return chain


def _check_row(row: AperyRow) -> None:
    if row.residue == 0:
        if (row.omega, row.omega_prime, row.a, row.b, row.c) != (0, 0, 0, 0, 0):
            raise InvariantViolation(f"Residue 0 row must vanish, got {row}")
        return
    if not 1 <= row.b <= row.a <= row.c:
        raise InvariantViolation(f"Expected 1 <= b <= a <= c, got {row}")
    if (row.b < row.a) != (row.a < row.c):
        raise InvariantViolation(f"Expected b < a exactly when a < c, got {row}")


def _c_invariant(semigroup: NumericalSemigroup, omega_prime: int, a: int) -> int:
    g1 = semigroup.multiplicity
    cap = a + semigroup.levels.reduction_number + g1
    # omega' + h*g1 is in S only from h = a on
    for h in range(a, cap + 1):
        if semigroup.order(omega_prime + h * g1) >= h:
            return h
    raise InvariantViolation(f"c scan for omega'={omega_prime} in {semigroup} exceeded cap {cap}")


def abc_table(semigroup: NumericalSemigroup) -> AperyInvariants:
    g1 = semigroup.multiplicity
    blown = blowup(semigroup)
    # Apéry set of the blow-up taken with respect to g1, not its own multiplicity
    primes = apery_by_residue(blown.generators, g1)

    rows = []
    for residue, omega in enumerate(semigroup.apery):
        omega_prime = primes[residue]
        quotient, remainder = divmod(omega - omega_prime, g1)
        if remainder or quotient < 0:
            raise InvariantViolation(
                f"omega_{residue}={omega} and omega'_{residue}={omega_prime} are not g1-congruent upward"
            )
        row = AperyRow(
            residue=residue,
            omega=omega,
            omega_prime=omega_prime,
            a=quotient,
            b=semigroup.order(omega),
            c=_c_invariant(semigroup, omega_prime, quotient),
        )
        _check_row(row)
        rows.append(row)
    return AperyInvariants(rows=tuple(rows))


def tangent_cone_is_cm(semigroup: NumericalSemigroup) -> bool:
    return abc_table(semigroup).is_cohen_macaulay


def skip_witness(
    semigroup: NumericalSemigroup,
    residue: int,
    table: Optional[AperyInvariants] = None,
) -> Optional[int]:
    g1 = semigroup.multiplicity
    if not 0 <= residue < g1:
        raise InvalidLevelError(f"Residue must lie in 0..{g1 - 1}, got {residue}")
    row = (table or abc_table(semigroup)).rows[residue]
    if not row.skips:
        return None
    for step in range(row.c - row.a):
        s = row.omega + step * g1
        if semigroup.order(s + g1) > semigroup.order(s) + 1:
            return s
    raise InvariantViolation(f"No skipping element found in residue {residue} of {semigroup} although a > b")


def c2_from_apery(semigroup: NumericalSemigroup, table: Optional[AperyInvariants] = None) -> int:
    """|C_2| read off the Apéry set: an order-2 element not reached from level 1 has s - g1 outside S."""
    return (table or abc_table(semigroup)).count_b(2)
