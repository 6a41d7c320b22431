"""Decomposition of a semigroup into m-irreducible oversemigroups.

S is the intersection of some oversemigroups S_1, ..., S_n of multiplicity m
exactly when every special gap of S above m is missing from at least one S_i.
So a minimal decomposition is a minimum set cover of those special gaps by the
sets P(S_i) = {h : h special gap of S, h > m, h ∉ S_i}, where the S_i range
over the inclusion-minimal m-irreducible oversemigroups of S.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence

import structlog

from app.semigroups.core import (
    Coords,
    NumericalSemigroup,
    contains,
    intersect,
    is_subset,
)
from app.semigroups.errors import Infeasible, LimitExceeded, NotOversemigroup
from app.semigroups.gapsets import special_gaps_above_m
from app.semigroups.oversemigroups import (
    DEFAULT_LIMIT,
    Frontier,
    coordinate_candidates,
    lower,
)

logger = structlog.get_logger(__name__)


@dataclass
class DecompositionResult:
    components: List[NumericalSemigroup]
    p_sets: List[FrozenSet[int]]
    target: FrozenSet[int]
    minimals: List[NumericalSemigroup] = field(default_factory=list)
    minimal_p_sets: List[FrozenSet[int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.components)


def _dominates(child: Coords, found: Coords) -> bool:
    """The semigroup with coordinates ``child`` contains the one at ``found``"""
    return all(c <= f for c, f in zip(child, found))


def minimal_m_irreducible_oversemigroups(
    S: NumericalSemigroup, threads: int = 1, limit: Optional[int] = DEFAULT_LIMIT
) -> List[NumericalSemigroup]:
    """Inclusion-minimal m-irreducible oversemigroups of S with multiplicity m.

    Each generation is first split into m-irreducible members (at most one
    candidate gap), which are final, and the rest, which are expanded. A child
    that contains an already found minimal is dropped, since neither it nor
    anything above it can be minimal. More than ``limit`` visited tuples
    raises LimitExceeded.
    """
    m = S.m
    found: List[Coords] = []
    frontier = Frontier.start(S.coords)

    while frontier.active:
        candidates: Dict[Coords, List[int]] = {
            y: coordinate_candidates(y, m) for y in sorted(frontier.active)
        }
        expandable = set()
        for y, indices in candidates.items():
            if len(indices) <= 1:
                found.append(y)
            else:
                expandable.add(y)

        def children(y: Coords) -> List[Coords]:
            kept = []
            for i in candidates[y]:
                child = lower(y, i, m)
                if not any(_dominates(child, b) for b in found):
                    kept.append(child)
            return kept

        frontier.active = expandable
        frontier.expand(children, threads=threads)
        if limit is not None and len(frontier.visited) > limit:
            raise LimitExceeded(limit)
        logger.debug(
            "Minimal search generation expanded",
            generation=frontier.generation,
            active=len(frontier.active),
            found=len(found),
        )

    return [NumericalSemigroup(m, y) for y in sorted(found)]


def p_set(S: NumericalSemigroup, T: NumericalSemigroup) -> FrozenSet[int]:
    """Special gaps of S above m that T leaves out"""
    if not is_subset(S, T):
        raise NotOversemigroup()
    return frozenset(h for h in special_gaps_above_m(S) if not contains(T, h))


def decomposition_bound(S: NumericalSemigroup) -> int:
    """Upper bound on the size of a minimal decomposition"""
    return max(1, min(len(special_gaps_above_m(S)), S.m - 1))


def minimum_cover(
    target: FrozenSet[int], p_sets: Sequence[FrozenSet[int]]
) -> List[int]:
    """Indices of a minimum-size subfamily of ``p_sets`` covering ``target``.

    Sizes are tried in increasing order; within a size, index tuples are
    searched lexicographically, so the first cover found is the
    lexicographically smallest of minimum size. Sets are bitmasks over the
    target; a branch is cut when the remaining sets cannot cover what is left,
    and a set adding nothing new is never taken.
    """
    bit = {h: 1 << k for k, h in enumerate(sorted(target))}
    full = (1 << len(bit)) - 1
    masks = [sum(bit[h] for h in p if h in bit) for p in p_sets]

    suffix = [0] * (len(masks) + 1)
    for idx in range(len(masks) - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] | masks[idx]
    if suffix[0] != full:
        covered = {h for h, b in bit.items() if suffix[0] & b}
        raise Infeasible(set(target) - covered)
    if full == 0:
        return []

    def search(start: int, covered: int, slots: int) -> Optional[List[int]]:
        if covered == full:
            return []
        if slots == 0 or (covered | suffix[start]) != full:
            return None
        for idx in range(start, len(masks)):
            if masks[idx] | covered == covered:
                continue
            rest = search(idx + 1, covered | masks[idx], slots - 1)
            if rest is not None:
                return [idx] + rest
        return None

    for size in range(1, len(masks) + 1):
        chosen = search(0, 0, size)
        if chosen is not None:
            return chosen
    raise Infeasible(target)


def full_decomposition(
    S: NumericalSemigroup, threads: int = 1, limit: Optional[int] = DEFAULT_LIMIT
) -> DecompositionResult:
    """S as the intersection of all its minimal m-irreducible oversemigroups"""
    target = frozenset(special_gaps_above_m(S))
    minimals = minimal_m_irreducible_oversemigroups(S, threads=threads, limit=limit)
    p_sets = [p_set(S, T) for T in minimals]
    assert intersect(minimals) == S
    return DecompositionResult(
        components=list(minimals),
        p_sets=list(p_sets),
        target=target,
        minimals=minimals,
        minimal_p_sets=p_sets,
    )


def minimal_decomposition(
    S: NumericalSemigroup, threads: int = 1, limit: Optional[int] = DEFAULT_LIMIT
) -> DecompositionResult:
    """A decomposition into the fewest m-irreducible semigroups"""
    start_time = time.time()
    full = full_decomposition(S, threads=threads, limit=limit)

    if not full.target:
        # only the maximum semigroup has no special gap above m
        components = [S]
        p_sets = [frozenset()]
    else:
        chosen = minimum_cover(full.target, full.minimal_p_sets)
        components = [full.minimals[idx] for idx in chosen]
        p_sets = [full.minimal_p_sets[idx] for idx in chosen]

    assert intersect(components) == S
    assert len(components) <= decomposition_bound(S)
    logger.info(
        "Minimal decomposition computed",
        multiplicity=S.m,
        target=sorted(full.target),
        minimals=len(full.minimals),
        components=len(components),
        duration=round(time.time() - start_time, 4),
    )
    return DecompositionResult(
        components=components,
        p_sets=p_sets,
        target=full.target,
        minimals=full.minimals,
        minimal_p_sets=full.minimal_p_sets,
    )
