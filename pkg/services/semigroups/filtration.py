"""
The M-adic filtration of a numerical semigroup: the order of every element up to a stabilization bound, the level sets hM \\ (h+1)M, the Hilbert function, the reduction number and the sets D_h (elements that skip a level when the multiplicity is added) and C_h (elements not reached from the previous level).

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from config import config
from services.semigroups.core import NumericalSemigroup
from services.semigroups.errors import InvalidLevelError, InvariantViolation, NotInSemigroupError

logger = logging.getLogger(__name__)

NOT_IN_S = -1


def _window_frobenius(semigroup: NumericalSemigroup) -> int:
    # any s > h*g1 + f lies in (h+1)M; for S = N the bound needs f clamped to 0
    return max(semigroup.frobenius, 0)


def _extend_orders(semigroup: NumericalSemigroup, orders: list[int], bound: int) -> list[int]:
    # ord(s) = 1 + max ord(s - g) over generators g with s - g in S
    g1 = semigroup.multiplicity
    apery = semigroup.apery
    generators = semigroup.generators
    if not orders:
        orders.append(0)
    for s in range(len(orders), bound + 1):
        if s < apery[s % g1]:
            orders.append(NOT_IN_S)
            continue
        best = NOT_IN_S
        for g in generators:
            if g > s:
                break
            previous = orders[s - g]
            if previous > best:
                best = previous
        orders.append(best + 1)
    return orders


def _ideal_equality_holds(orders: list[int], g1: int, frobenius: int, h: int) -> bool:
    """(h+1)M == g1 + hM, checked on s <= (h+1)*g1 + f; beyond that s - g1 already lies in (h+1)M."""
    for s in range(g1, (h + 1) * g1 + frobenius + 1):
        if orders[s] >= h + 1 and orders[s - g1] < h:
            return False
    return True


@dataclass(frozen=True)
class LevelTable:
    semigroup: NumericalSemigroup
    bound: int
    orders: tuple[int, ...]
    hilbert: tuple[int, ...]
    reduction_number: int

    @property
    def max_level(self) -> int:
        """Largest h whose elements, and those elements plus g1, all fall inside the window."""
        g1 = self.semigroup.multiplicity
        return (self.bound - _window_frobenius(self.semigroup) - g1) // g1

    def ord_of(self, value: int) -> int:
        if not self.semigroup.contains(value):
            raise NotInSemigroupError(value, self.semigroup.key)
        if value <= self.bound:
            return self.orders[value]
        # past the reduction number adding g1 raises the order by exactly one
        g1 = self.semigroup.multiplicity
        floor = self.reduction_number * g1 + _window_frobenius(self.semigroup)
        steps = (value - floor - 1) // g1
        return self.orders[value - steps * g1] + steps

    def level(self, h: int) -> list[int]:
        top = h * self.semigroup.multiplicity + _window_frobenius(self.semigroup)
        return [s for s in range(min(top, self.bound) + 1) if self.orders[s] == h]


def build_level_table(semigroup: NumericalSemigroup, margin: Optional[int] = None) -> LevelTable:
    margin = config.LEVEL_MARGIN if margin is None else margin
    g1 = semigroup.multiplicity
    f = _window_frobenius(semigroup)
    orders: list[int] = []

    guess = 1
    reduction: Optional[int] = None
    while reduction is None:
        _extend_orders(semigroup, orders, (guess + 1) * g1 + f + g1)
        reduction = next(
            (h for h in range(1, guess + 1) if _ideal_equality_holds(orders, g1, f, h)),
            None,
        )
        guess *= 2

    bound = (reduction + margin + 1) * g1 + f + g1
    _extend_orders(semigroup, orders, bound)

    hilbert = [0] * (reduction + 1)
    for s in range(reduction * g1 + f + 1):
        o = orders[s]
        if 0 <= o <= reduction:
            hilbert[o] += 1

    table = LevelTable(
        semigroup=semigroup,
        bound=bound,
        orders=tuple(orders),
        hilbert=tuple(hilbert),
        reduction_number=reduction,
    )
    if hilbert[0] != 1 or hilbert[1] != semigroup.embedding_dimension or hilbert[-1] != g1:
        raise InvariantViolation(f"Inconsistent Hilbert function {hilbert} for {semigroup}")
    logger.debug("level table %s bound=%s r=%s", semigroup, bound, reduction)
    return table


def _table_for_level(semigroup: NumericalSemigroup, h: int) -> LevelTable:
    table = semigroup.levels
    if h <= table.max_level:
        return table
    return build_level_table(semigroup, margin=h - table.reduction_number)


@dataclass(frozen=True)
class LevelSets:
    d: dict[int, list[int]]
    c: dict[int, list[int]]


def level_set(semigroup: NumericalSemigroup, h: int) -> list[int]:
    if h < 0:
        raise InvalidLevelError(f"Level must be non-negative, got {h}")
    return _table_for_level(semigroup, h).level(h)


def hilbert_function(semigroup: NumericalSemigroup) -> tuple[list[int], int]:
    table = semigroup.levels
    return list(table.hilbert), table.reduction_number


def d_set(semigroup: NumericalSemigroup, h: int) -> list[int]:
    if h < 1:
        raise InvalidLevelError(f"D_h is defined for h >= 2, got {h}")
    if h == 1:
        return []
    table = _table_for_level(semigroup, h)
    g1 = semigroup.multiplicity
    return [s for s in table.level(h - 1) if table.orders[s + g1] >= h + 1]


def _comes_from_previous_level(table: LevelTable, s: int, h: int) -> bool:
    below = s - table.semigroup.multiplicity
    return below >= 0 and table.orders[below] == h - 1


def c_set(semigroup: NumericalSemigroup, h: int) -> list[int]:
    if h < 1:
        raise InvalidLevelError(f"C_h is defined for h >= 1, got {h}")
    table = _table_for_level(semigroup, h)
    return [s for s in table.level(h) if not _comes_from_previous_level(table, s, h)]


def is_in_c_set(semigroup: NumericalSemigroup, value: int, h: int) -> bool:
    if not semigroup.contains(value) or semigroup.order(value) != h:
        return False
    below = value - semigroup.multiplicity
    return not (semigroup.contains(below) and semigroup.order(below) == h - 1)


def level_sets(semigroup: NumericalSemigroup) -> LevelSets:
    r = semigroup.levels.reduction_number
    return LevelSets(
        d={h: d_set(semigroup, h) for h in range(2, r + 1)},
        c={h: c_set(semigroup, h) for h in range(1, r + 1)},
    )


def first_decrease(semigroup: NumericalSemigroup) -> Optional[int]:
    hilbert = semigroup.levels.hilbert
    return next((h for h in range(1, len(hilbert)) if hilbert[h] < hilbert[h - 1]), None)


def counting_residuals(semigroup: NumericalSemigroup) -> dict[int, int]:
    """H(h-1) - H(h) - (|D_h| - |C_h|) per level; every entry is zero."""
    hilbert = semigroup.levels.hilbert
    return {
        h: (hilbert[h - 1] - hilbert[h]) - (len(d_set(semigroup, h)) - len(c_set(semigroup, h)))
        for h in range(2, len(hilbert))
    }


def format_hilbert(hilbert: list[int], multiplicity: int) -> str:
    """Hilbert sequence cut at the start of its final constant run, e.g. `1,2,3, →`."""
    end = len(hilbert)
    while end > 1 and hilbert[end - 2] == multiplicity:
        end -= 1
    return ",".join(str(v) for v in hilbert[:end]) + ", →"
