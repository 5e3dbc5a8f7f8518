"""
Construction and basic arithmetic of numerical semigroups: reduction to minimal generators, Apéry set with respect to the multiplicity, Frobenius number, membership, order and symmetry. A `NumericalSemigroup` is immutable once built; its level table is computed on first use and cached on the instance.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import TYPE_CHECKING

from services.semigroups.errors import InvalidGeneratorsError, NotInSemigroupError

if TYPE_CHECKING:
    from services.semigroups.filtration import LevelTable

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


def apery_by_residue(generators: Sequence[int], modulus: int) -> list[int]:
    """Smallest element of each residue class mod `modulus` in the semigroup spanned by `generators` and `modulus`.

    Round-robin shortest paths over the residue graph: for each generator g the
    residues split into gcd(g, modulus) cycles, and one walk around each cycle
    starting from its current minimum relaxes every arc of weight g.
    """
    unreachable = INT64_MAX
    dist = [unreachable] * modulus
    dist[0] = 0
    for generator in generators:
        step = generator % modulus
        if step == 0:
            continue
        cycles = gcd(step, modulus)
        length = modulus // cycles
        for start in range(cycles):
            cycle = [(start + k * step) % modulus for k in range(length)]
            origin = min(range(length), key=lambda k: dist[cycle[k]])
            if dist[cycle[origin]] == unreachable:
                continue
            for k in range(origin, origin + length - 1):
                here = cycle[k % length]
                there = cycle[(k + 1) % length]
                candidate = dist[here] + generator
                if candidate < dist[there]:
                    dist[there] = candidate
    return dist


def _representable(value: int, generators: Sequence[int]) -> bool:
    divisor = reduce(gcd, generators)
    if value % divisor:
        return False
    scaled = [g // divisor for g in generators]
    target = value // divisor
    if scaled[0] == 1:
        return True
    apery = apery_by_residue(scaled[1:], scaled[0])
    return target >= apery[target % scaled[0]]


def minimal_generators(values: Iterable[int]) -> tuple[int, ...]:
    # a value can only be written with strictly smaller generators, so one ascending pass suffices
    kept: list[int] = []
    for value in sorted(set(values)):
        if kept and _representable(value, kept):
            logger.debug("dropping redundant generator %s", value)
            continue
        kept.append(value)
    return tuple(kept)


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    apery: tuple[int, ...]
    frobenius: int

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def key(self) -> str:
        return ",".join(str(g) for g in self.generators)

    @property
    def genus(self) -> int:
        return sum(omega // self.multiplicity for omega in self.apery)

    @cached_property
    def levels(self) -> LevelTable:
        from services.semigroups.filtration import build_level_table

        return build_level_table(self)

    def contains(self, value: int) -> bool:
        return value >= 0 and value >= self.apery[value % self.multiplicity]

    def order(self, value: int) -> int:
        if not self.contains(value):
            raise NotInSemigroupError(value, self.key)
        return self.levels.ord_of(value)

    def gaps(self) -> list[int]:
        return [z for z in range(self.frobenius + 1) if not self.contains(z)]

    def to_json(self) -> str:
        return json.dumps(list(self.generators))

    def __str__(self) -> str:
        return f"<{self.key}>"


def make_semigroup(raw: Iterable[int]) -> NumericalSemigroup:
    values = list(raw)
    if not values:
        raise InvalidGeneratorsError("At least one generator is required")
    if any(int(v) != v or v < 1 for v in values):
        raise InvalidGeneratorsError(f"Generators must be positive integers, got {values}")
    if reduce(gcd, values) != 1:
        raise InvalidGeneratorsError(
            f"gcd of {sorted(set(values))} is {reduce(gcd, values)}; not a numerical semigroup"
        )

    generators = minimal_generators(values)
    if generators[0] * generators[-1] > INT64_MAX:
        raise InvalidGeneratorsError("Generator set too large: Frobenius bound overflows 64-bit integers")
    return semigroup_from_minimal(generators)


def semigroup_from_minimal(generators: tuple[int, ...]) -> NumericalSemigroup:
    """Skips the minimality pass; `generators` must already be the sorted minimal system with gcd 1."""
    apery = apery_by_residue(generators[1:], generators[0])
    frobenius = max(apery) - generators[0]
    return NumericalSemigroup(generators=generators, apery=tuple(apery), frobenius=frobenius)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Accepts the JSON array form `[24,25,36]` or the canonical key `24,25,36`."""
    stripped = text.strip()
    try:
        payload = json.loads(stripped if stripped.startswith("[") else f"[{stripped}]")
    except json.JSONDecodeError as exc:
        raise InvalidGeneratorsError(f"Cannot parse generators from {text!r}") from exc
    if not isinstance(payload, list) or not all(isinstance(v, int) for v in payload):
        raise InvalidGeneratorsError(f"Generators must be a list of integers, got {text!r}")
    return make_semigroup(payload)


def apery_set(semigroup: NumericalSemigroup) -> list[int]:
    return list(semigroup.apery)


def contains(semigroup: NumericalSemigroup, value: int) -> bool:
    return semigroup.contains(value)


def order(semigroup: NumericalSemigroup, value: int) -> int:
    return semigroup.order(value)


def is_symmetric(semigroup: NumericalSemigroup) -> bool:
    f = semigroup.frobenius
    return all(semigroup.contains(z) != semigroup.contains(f - z) for z in range(f + 1))
