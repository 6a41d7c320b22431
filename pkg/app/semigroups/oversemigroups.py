"""Oversemigroups with the same multiplicity, enumerated in coordinate space.

Adjoining a special gap x > m to S lowers exactly one coordinate, w(x mod m),
by m. Starting from S and adjoining every such gap generation by generation
reaches every oversemigroup of multiplicity m, since any T ⊋ S is connected to
S by a chain that adds max(T \\ S_n) at each step.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Set

import structlog

from app.semigroups.core import (
    Coords,
    NumericalSemigroup,
    contains,
    from_coordinates,
    is_subset,
)
from app.semigroups.errors import (
    LimitExceeded,
    NotAboveMultiplicity,
    NotOversemigroup,
    NotSpecialGap,
)
from app.semigroups.gapsets import special_gap_indices, special_gaps

logger = structlog.get_logger(__name__)

DEFAULT_LIMIT = 1_000_000


def lower(coords: Coords, i: int, m: int) -> Coords:
    """Coordinates after adjoining the special gap w(i) - m"""
    return coords[: i - 1] + (coords[i - 1] - m,) + coords[i:]


def coordinate_candidates(coords: Coords, m: int) -> List[int]:
    """Residues i whose special gap w(i) - m exceeds m.

    Besides w(i) > 2m and Apéry maximality, 2(w(i) - m) must be a member;
    maximality alone admits gaps such as 7 in <5, 6, 13>, whose adjunction
    is not closed (7 + 7 = 14 is still a gap).
    """
    return [i for i in special_gap_indices(m, coords) if coords[i - 1] > 2 * m]


@dataclass
class Frontier:
    """Generation-by-generation search state over coordinate tuples"""

    active: Set[Coords]
    visited: Set[Coords] = field(default_factory=set)
    accumulated: Set[Coords] = field(default_factory=set)
    generation: int = 0

    @classmethod
    def start(cls, coords: Coords) -> "Frontier":
        return cls(active={coords}, visited={coords}, accumulated={coords})

    def expand(
        self,
        children: Callable[[Coords], Iterable[Coords]],
        threads: int = 1,
    ) -> Set[Coords]:
        """Replace the active set by the unvisited children of its members.

        Children of one generation are computed (possibly on a thread pool)
        before any is merged, and merging walks the parents in sorted order,
        so the result does not depend on scheduling.
        """
        parents = sorted(self.active)
        if threads > 1 and len(parents) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(pool.map(lambda y: list(children(y)), parents))
        else:
            batches = [list(children(y)) for y in parents]

        fresh: Set[Coords] = set()
        for batch in batches:
            for child in batch:
                if child not in self.visited:
                    self.visited.add(child)
                    fresh.add(child)
        self.accumulated |= fresh
        self.active = fresh
        self.generation += 1
        return fresh


def expand_coordinates(
    coords: Coords,
    m: int,
    limit: Optional[int] = DEFAULT_LIMIT,
    threads: int = 1,
    forbidden: Optional[int] = None,
) -> Set[Coords]:
    """Coordinates of every oversemigroup of multiplicity m.

    ``forbidden`` names a gap that is never adjoined; the result is then the
    set of oversemigroups that keep it as a gap.
    """

    def children(y: Coords) -> List[Coords]:
        return [
            lower(y, i, m)
            for i in coordinate_candidates(y, m)
            if y[i - 1] - m != forbidden
        ]

    frontier = Frontier.start(tuple(coords))
    while frontier.active:
        frontier.expand(children, threads=threads)
        if limit is not None and len(frontier.accumulated) > limit:
            raise LimitExceeded(limit)
        logger.debug(
            "Frontier generation expanded",
            generation=frontier.generation,
            active=len(frontier.active),
            accumulated=len(frontier.accumulated),
        )
    return frontier.accumulated


def adjoin(S: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """S ∪ {x} for a special gap x > m"""
    if x not in special_gaps(S):
        raise NotSpecialGap(x)
    if x <= S.m:
        raise NotAboveMultiplicity(x, S.m)
    return from_coordinates(S.m, lower(S.coords, x % S.m, S.m))


def oversemigroups(
    S: NumericalSemigroup,
    limit: Optional[int] = DEFAULT_LIMIT,
    threads: int = 1,
) -> List[NumericalSemigroup]:
    """All T ⊇ S with multiplicity m, sorted by coordinates"""
    start_time = time.time()
    found = expand_coordinates(S.coords, S.m, limit=limit, threads=threads)
    result = [NumericalSemigroup(S.m, y) for y in sorted(found)]
    logger.info(
        "Oversemigroups enumerated",
        multiplicity=S.m,
        count=len(result),
        duration=round(time.time() - start_time, 4),
    )
    return result


def adjunction_chain(
    S: NumericalSemigroup, T: NumericalSemigroup
) -> List[NumericalSemigroup]:
    """S = S_0 ⊊ S_1 ⊊ ... ⊊ S_k = T, adding max(T \\ S_n) at each step"""
    if not is_subset(S, T):
        raise NotOversemigroup()
    chain = [S]
    current = S
    while current != T:
        bound = max(current.coords) - current.m
        x = max(
            y
            for y in range(bound + 1)
            if contains(T, y) and not contains(current, y)
        )
        current = adjoin(current, x)
        chain.append(current)
    return chain
