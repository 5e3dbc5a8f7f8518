"""
Brute-force reference implementations used by the property tests. They share no code with the engine: membership is plain reachability, and the order of an element is the largest h for which some sum of h generators can be completed by an element of the semigroup.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

from functools import reduce
from math import gcd

from hypothesis import strategies as st


def brute_members(generators: list[int], limit: int) -> list[bool]:
    member = [False] * (limit + 1)
    member[0] = True
    for s in range(1, limit + 1):
        member[s] = any(g <= s and member[s - g] for g in generators)
    return member


def brute_orders(generators: list[int], limit: int) -> list[int]:
    member = brute_members(generators, limit)
    mask = (1 << (limit + 1)) - 1
    member_bits = sum(1 << s for s in range(limit + 1) if member[s])
    orders = [0 if member[s] else -1 for s in range(limit + 1)]
    sums = {0}
    h = 0
    while True:
        h += 1
        sums = {a + g for a in sums for g in generators if a + g <= limit}
        if not sums:
            return orders
        level_bits = 0
        for a in sums:
            level_bits |= (member_bits << a) & mask
        for s in range(limit + 1):
            if (level_bits >> s) & 1:
                orders[s] = h


def brute_apery(generators: list[int], limit: int) -> list[int]:
    member = brute_members(generators, limit)
    m = min(generators)
    return [next(s for s in range(i, limit + 1, m) if member[s]) for i in range(m)]


@st.composite
def small_semigroups(draw: st.DrawFn, max_multiplicity: int = 15, max_extra: int = 4) -> list[int]:
    m = draw(st.integers(min_value=2, max_value=max_multiplicity))
    extra = draw(st.lists(st.integers(min_value=m + 1, max_value=3 * m + 7), min_size=1, max_size=max_extra))
    generators = sorted({m, *extra})
    if reduce(gcd, generators) != 1:
        generators.append(m + 1)
    return sorted(set(generators))
