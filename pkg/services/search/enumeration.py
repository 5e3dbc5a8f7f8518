"""
Exhaustive, duplicate-free enumeration of the numerical semigroups in a bounded family.

Candidates are minimal generator tuples g1 < g2 < ... grown depth first. Reachability of the current prefix is kept as an integer bitset up to the generator limit, so a candidate next generator is minimal exactly when its bit is clear; non-minimal prefixes are never built and no dedup set is needed. Depth-first preorder over increasing tuples is the lexicographic order of the tuples, which makes the stream canonical. The top-level (g1, g2) choices form the partitions handed to workers.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import hashlib
import logging
from collections.abc import Iterator
from math import gcd
from typing import Optional

from config import config
from models.search.search import SearchConstraints
from services.semigroups.core import NumericalSemigroup, is_symmetric, minimal_generators, semigroup_from_minimal
from services.semigroups.errors import InvariantViolation, SearchConstraintsError

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]


def generator_limit(constraints: SearchConstraints, multiplicity: int) -> int:
    """Largest minimal generator worth trying; a generator above f + g1 is never minimal."""
    bounds = []
    if constraints.max_generator is not None:
        bounds.append(constraints.max_generator)
    if constraints.max_frobenius is not None:
        bounds.append(constraints.max_frobenius + multiplicity)
    if not bounds:
        raise SearchConstraintsError("Search space is unbounded: set max_generator or max_frobenius")
    return min(bounds)


def partitions(constraints: SearchConstraints) -> list[Partition]:
    found: list[Partition] = []
    for g1 in range(1, constraints.max_multiplicity + 1):
        limit = generator_limit(constraints, g1)
        if g1 == 1:
            if constraints.ed_min <= 1:
                found.append((1,))
            continue
        if constraints.ed_max < 2:
            continue
        found.extend((g1, g2) for g2 in range(g1 + 1, limit + 1) if g2 % g1)
    return found


def _close(reach: int, generator: int, mask: int, limit: int) -> int:
    # closes under adding `generator`; shifts by g, 2g, 4g, ... cover every multiple up to limit
    step = generator
    while step <= limit:
        reach |= (reach << step) & mask
        step <<= 1
    return reach


def _complete(constraints: SearchConstraints, generators: tuple[int, ...]) -> Optional[NumericalSemigroup]:
    if config.SEARCH_VERIFY_MINIMALITY and minimal_generators(generators) != generators:
        raise InvariantViolation(f"Enumeration produced a non-minimal tuple {generators}")
    semigroup = semigroup_from_minimal(generators)
    if constraints.max_frobenius is not None and semigroup.frobenius > constraints.max_frobenius:
        return None
    if constraints.symmetric_only and not is_symmetric(semigroup):
        return None
    return semigroup


def _walk(
    constraints: SearchConstraints,
    prefix: tuple[int, ...],
    reach: int,
    divisor: int,
    limit: int,
) -> Iterator[NumericalSemigroup]:
    ed = len(prefix)
    if divisor == 1 and ed >= constraints.ed_min:
        semigroup = _complete(constraints, prefix)
        if semigroup is not None:
            yield semigroup
    # minimal generators lie in distinct residue classes mod g1
    if ed >= constraints.ed_max or ed >= prefix[0]:
        return
    mask = (1 << (limit + 1)) - 1
    for candidate in range(prefix[-1] + 1, limit + 1):
        if (reach >> candidate) & 1:
            continue
        yield from _walk(
            constraints,
            prefix + (candidate,),
            _close(reach, candidate, mask, limit),
            gcd(divisor, candidate),
            limit,
        )


def enumerate_partition(constraints: SearchConstraints, partition: Partition) -> Iterator[NumericalSemigroup]:
    if partition == (1,):
        yield semigroup_from_minimal((1,))
        return
    g1, g2 = partition
    limit = generator_limit(constraints, g1)
    mask = (1 << (limit + 1)) - 1
    reach = _close(_close(1, g1, mask, limit), g2, mask, limit)
    yield from _walk(constraints, partition, reach, gcd(g1, g2), limit)


def enumerate_semigroups(constraints: SearchConstraints) -> Iterator[NumericalSemigroup]:
    for partition in partitions(constraints):
        yield from enumerate_partition(constraints, partition)


def enumeration_digest(constraints: SearchConstraints) -> str:
    """sha256 over the newline-joined canonical keys of the whole family."""
    digest = hashlib.sha256()
    for semigroup in enumerate_semigroups(constraints):
        digest.update(semigroup.key.encode())
        digest.update(b"\n")
    return digest.hexdigest()
