"""
Maximal representations of semigroup elements, their lexicographic order, the map psi from D_h into C_h and the iterative construction that turns psi into an injection by replacing one summand per step.

Images are kept as nondecreasing tuples of generator summands. Two images of the same weight compare in the lexicographic order of their coefficient vectors, which is the reverse of the plain tuple order on sorted summands; both keys are exposed so the equivalence can be checked.

Copyright (c) 2026 Stefan Kumarasinghe

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from config import config
from services.semigroups.core import NumericalSemigroup
from services.semigroups.errors import (
    InvalidLevelError,
    InvariantViolation,
    NotInDhError,
    NotInSemigroupError,
    RepresentationLimitError,
)
from services.semigroups.filtration import d_set, is_in_c_set

logger = logging.getLogger(__name__)

Summands = tuple[int, ...]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class Representation:
    coeffs: tuple[int, ...]
    value: int
    weight: int

    def summands(self, generators: tuple[int, ...]) -> Summands:
        return tuple(g for g, count in zip(generators, self.coeffs) for _ in range(count))


def coefficient_vector(generators: tuple[int, ...], summands: Summands) -> tuple[int, ...]:
    counts = Counter(summands)
    return tuple(counts.get(g, 0) for g in generators)


def format_summands(summands: Summands) -> str:
    """`4·25+36` style rendering with summands grouped in nondecreasing order."""
    counts = Counter(summands)
    parts = []
    for g in sorted(counts):
        parts.append(f"{counts[g]}·{g}" if counts[g] > 1 else str(g))
    return "+".join(parts) if parts else "0"


def psi_label(step: int) -> str:
    if step == 0:
        return "ψ"
    if step == 1:
        return "ψ′"
    if step == 2:
        return "ψ″"
    return f"ψ⁽{str(step).translate(_SUPERSCRIPTS)}⁾"


def maximal_representations(semigroup: NumericalSemigroup, value: int) -> list[Representation]:
    """All coefficient vectors of weight ord(value), in decreasing lexicographic order."""
    if not semigroup.contains(value):
        raise NotInSemigroupError(value, semigroup.key)
    generators = semigroup.generators
    n = len(generators)
    target_weight = semigroup.order(value)
    limit = config.MAX_REPRESENTATIONS
    found: list[Representation] = []
    coeffs = [0] * n

    def descend(index: int, remaining: int, needed: int) -> None:
        g = generators[index]
        if index == n - 1:
            if remaining == needed * g:
                coeffs[index] = needed
                found.append(Representation(tuple(coeffs), value, target_weight))
                if len(found) > limit:
                    raise RepresentationLimitError(
                        f"More than {limit} maximal representations of {value} in {semigroup}"
                    )
                coeffs[index] = 0
            return
        for count in range(min(needed, remaining // g), -1, -1):
            rest = remaining - count * g
            rest_needed = needed - count
            if not semigroup.contains(rest) or rest > rest_needed * generators[-1]:
                continue
            # what is left must still carry rest_needed summands, each at least the next generator
            if rest_needed > rest // generators[index + 1] or rest_needed > semigroup.order(rest):
                continue
            coeffs[index] = count
            descend(index + 1, rest, rest_needed)
        coeffs[index] = 0

    if n == 1:
        return [Representation((value // generators[0],), value, target_weight)]
    descend(0, value, target_weight)
    return found


def lex_greatest_maximal_rep(semigroup: NumericalSemigroup, value: int) -> Representation:
    return maximal_representations(semigroup, value)[0]


def _require_in_d(semigroup: NumericalSemigroup, h: int, value: int) -> None:
    g1 = semigroup.multiplicity
    if (
        not semigroup.contains(value)
        or semigroup.order(value) != h - 1
        or semigroup.order(value + g1) < h + 1
    ):
        raise NotInDhError(value, h)


def _initial_image(semigroup: NumericalSemigroup, h: int, value: int) -> Summands:
    rep = lex_greatest_maximal_rep(semigroup, value + semigroup.multiplicity)
    return rep.summands(semigroup.generators)[:h]


def psi_map(semigroup: NumericalSemigroup, h: int, value: int) -> int:
    _require_in_d(semigroup, h, value)
    image = sum(_initial_image(semigroup, h, value))
    if not is_in_c_set(semigroup, image, h):
        raise InvariantViolation(f"psi({value}) = {image} is not in C_{h} of {semigroup}")
    return image


class InjectionStatus(str, Enum):
    SUCCESS = "success"
    FAILURE = "failure"


@dataclass(frozen=True)
class InjectionStep:
    step: int
    block: int
    tie_index: int
    preimage: int
    partner: int
    replaced: int
    generator: int
    before: Summands
    after: Summands
    rule: str

    def describe(self) -> str:
        return (
            f"block {self.block}, tie at index {self.tie_index}: "
            f"{psi_label(self.step)}({self.preimage}) = {format_summands(self.after)} "
            f"(replaced {self.replaced} by {self.generator}; tied with {self.partner})"
        )


@dataclass(frozen=True)
class TieFailure:
    tie_index: int
    preimages: tuple[int, int]
    image: Summands
    step: int
    reason: str

    def describe(self) -> str:
        label = psi_label(self.step)
        u, v = self.preimages
        return (
            f"{label}({u}) = {label}({v}) = {format_summands(self.image)} "
            f"at index {self.tie_index}: {self.reason}"
        )


@dataclass(frozen=True)
class InjectionResult:
    level: int
    status: InjectionStatus
    images: dict[int, Summands]
    initial_images: dict[int, Summands]
    trace: tuple[InjectionStep, ...] = ()
    blocks: int = 0
    failure_point: Optional[TieFailure] = None
    assignment: dict[int, int] = field(default_factory=dict)

    @property
    def succeeded(self) -> bool:
        return self.status is InjectionStatus.SUCCESS


def _lex_key(generators: tuple[int, ...], images: dict[int, Summands]) -> Callable[[int], tuple[int, ...]]:
    def key(s: int) -> tuple[int, ...]:
        return coefficient_vector(generators, images[s])

    return key


def _first_tie(sequence: list[int], images: dict[int, Summands]) -> Optional[int]:
    return next((a for a in range(len(sequence) - 1) if images[sequence[a]] == images[sequence[a + 1]]), None)


def _is_submultiset(small: Counter[int], big: Counter[int]) -> bool:
    return all(big[g] >= count for g, count in small.items())


def _distinguishing_generator(
    current: Summands,
    position: int,
    reps: list[Summands],
) -> Optional[tuple[int, str]]:
    removed = current[position]
    kept = Counter(current[:position] + current[position + 1:])

    # the new image stays a sub-sum of a maximal representation, which keeps it inside C_h
    nested = set()
    for rep in reps:
        rep_counts = Counter(rep)
        if not _is_submultiset(kept, rep_counts):
            continue
        leftover = rep_counts - kept
        nested.update(g for g in leftover if g > removed)
    if nested:
        return min(nested), "nested"

    loose = {g for rep in reps for g in rep if g > removed and g not in current}
    if loose:
        return min(loose), "loose"
    return None


def build_injection(semigroup: NumericalSemigroup, h: int) -> InjectionResult:
    if h < 2:
        raise InvalidLevelError(f"The injection is built for h >= 2, got {h}")
    generators = semigroup.generators
    domain = d_set(semigroup, h)
    if not domain:
        return InjectionResult(level=h, status=InjectionStatus.SUCCESS, images={}, initial_images={})

    reps = _representations_of(semigroup, domain)
    images: dict[int, Summands] = {s: reps[s][0][:h] for s in domain}
    initial = dict(images)
    key = _lex_key(generators, images)
    sequence = sorted(domain, key=key, reverse=True)

    trace: list[InjectionStep] = []
    block = 0
    block_index: Optional[int] = None
    failure: Optional[TieFailure] = None

    while True:
        tie = _first_tie(sequence, images)
        if tie is None:
            break
        if tie != block_index:
            block += 1
            block_index = tie
        u, v = sequence[tie], sequence[tie + 1]
        position = h - block
        if position < 0:
            failure = TieFailure(
                tie_index=tie + 1,
                preimages=(u, v),
                image=images[v],
                step=len(trace),
                reason=f"no summand left to replace after {h} blocks",
            )
            break

        target, choice = v, _distinguishing_generator(images[v], position, reps[v])
        if choice is None:
            target, choice = u, _distinguishing_generator(images[u], position, reps[u])
        if choice is None:
            failure = TieFailure(
                tie_index=tie + 1,
                preimages=(u, v),
                image=images[v],
                step=len(trace),
                reason="no distinguishing generator",
            )
            break

        generator, rule = choice
        before = images[target]
        after = tuple(sorted(before[:position] + before[position + 1:] + (generator,)))
        images[target] = after
        trace.append(
            InjectionStep(
                step=len(trace) + 1,
                block=block,
                tie_index=tie + 1,
                preimage=target,
                partner=u if target == v else v,
                replaced=before[position],
                generator=generator,
                before=before,
                after=after,
                rule=rule,
            )
        )
        logger.debug("injection %s h=%s %s", semigroup, h, trace[-1].describe())
        sequence = sorted(sequence, key=key, reverse=True)

    assignment = {s: sum(images[s]) for s in domain}
    if failure is None:
        injective = len(set(assignment.values())) == len(assignment)
        inside = all(is_in_c_set(semigroup, t, h) for t in assignment.values())
        if not (injective and inside):
            last = sequence[-1]
            failure = TieFailure(
                tie_index=len(sequence),
                preimages=(last, last),
                image=images[last],
                step=len(trace),
                reason="postcondition failed: images not injective into C_h",
            )

    if failure is None:
        return InjectionResult(
            level=h,
            status=InjectionStatus.SUCCESS,
            images=dict(images),
            initial_images=initial,
            trace=tuple(trace),
            blocks=block,
            assignment=assignment,
        )
    if len(domain) <= h + 1:
        # under this bound the replacement procedure always resolves every tie
        raise InvariantViolation(f"|D_{h}| = {len(domain)} <= {h + 1} in {semigroup} but {failure.describe()}")
    return InjectionResult(
        level=h,
        status=InjectionStatus.FAILURE,
        images=dict(images),
        initial_images=initial,
        trace=tuple(trace),
        blocks=block,
        failure_point=failure,
    )


def sub_multisets(rep: Summands, h: int) -> dict[int, Summands]:
    """One h-element sub-multiset of a representation per reachable sum."""
    results: dict[int, Summands] = {}
    counts = sorted(Counter(rep).items())

    def pick(index: int, left: int, chosen: Summands) -> None:
        if left == 0:
            results.setdefault(sum(chosen), chosen)
            return
        if index == len(counts):
            return
        g, available = counts[index]
        for take in range(min(available, left), -1, -1):
            pick(index + 1, left - take, chosen + (g,) * take)

    pick(0, h, ())
    return results


def sub_sums(rep: Summands, h: int) -> set[int]:
    return set(sub_multisets(rep, h))


def _sub_sum_edges(reps: dict[int, list[Summands]], h: int) -> dict[int, dict[int, Summands]]:
    edges: dict[int, dict[int, Summands]] = {}
    for s, rep_list in reps.items():
        options: dict[int, Summands] = {}
        for rep in rep_list:
            for t, chosen in sub_multisets(rep, h).items():
                options.setdefault(t, chosen)
        edges[s] = dict(sorted(options.items()))
    return edges


def _max_matching(edges: dict[int, dict[int, Summands]]) -> dict[int, int]:
    """Augmenting paths in ascending order of both sides; returns preimage -> image."""
    owner: dict[int, int] = {}

    def augment(s: int, seen: set[int]) -> bool:
        for t in edges[s]:
            if t in seen:
                continue
            seen.add(t)
            if t not in owner or augment(owner[t], seen):
                owner[t] = s
                return True
        return False

    for s in sorted(edges):
        augment(s, set())
    return {s: t for t, s in owner.items()}


def _representations_of(semigroup: NumericalSemigroup, domain: list[int]) -> dict[int, list[Summands]]:
    g1 = semigroup.multiplicity
    return {
        s: [rep.summands(semigroup.generators) for rep in maximal_representations(semigroup, s + g1)]
        for s in domain
    }


def matching_bound(semigroup: NumericalSemigroup, h: int) -> int:
    """Diagnostic only: maximum matching of D_h into C_h along h-element sub-sums of maximal representations."""
    domain = d_set(semigroup, h)
    return len(_max_matching(_sub_sum_edges(_representations_of(semigroup, domain), h)))
