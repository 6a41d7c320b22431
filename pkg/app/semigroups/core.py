"""Numerical semigroups of fixed multiplicity stored by their Kunz coordinates.

A semigroup S with multiplicity m is determined by its Apéry set with respect
to m, {w(0)=0, w(1), ..., w(m-1)}, where w(i) is the least member of S
congruent to i modulo m. The tuple (w(1), ..., w(m-1)) is the canonical value;
generator lists and gap sets are only interchange formats.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import structlog

from app.semigroups.errors import (
    BadResidue,
    BelowMultiplicity,
    EmptyGenerators,
    EmptyList,
    KunzViolation,
    MultiplicityMismatch,
    NoGaps,
    NotClosed,
    NotCofinite,
    ParseError,
)

logger = structlog.get_logger(__name__)

Coords = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class NumericalSemigroup:
    """Multiplicity ``m`` plus the Kunz coordinates ``coords``.

    ``coords[i - 1]`` is w(i). Build instances with ``from_generators``,
    ``from_gaps`` or ``from_coordinates``; they validate, this class does not.
    """

    m: int
    coords: Coords

    def w(self, i: int) -> int:
        """Least member congruent to ``i`` modulo m (w(0) = 0)"""
        r = i % self.m
        return 0 if r == 0 else self.coords[r - 1]

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    def __str__(self) -> str:
        return f"kunz:{self.m}:{','.join(str(c) for c in self.coords)}"


@dataclass(frozen=True)
class AperySet:
    """Apéry set of a semigroup with respect to ``n``, sorted ascending"""

    n: int
    elements: Tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing ``gens``.

    The Apéry set with respect to the least generator is found with a
    shortest-path relaxation over the residue classes: from residue r with
    current minimum d, adding generator g reaches residue (d + g) mod m.
    """
    generators = sorted(set(gens))
    if not generators:
        raise EmptyGenerators()
    if generators[0] <= 0:
        raise ParseError("Generators must be positive integers")

    divisor = reduce(gcd, generators)
    if divisor != 1:
        raise NotCofinite(divisor)

    m = generators[0]
    if m == 1:
        return NumericalSemigroup(1, ())

    dist: List[Optional[int]] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in generators[1:]:
            nd = d + g
            nr = nd % m
            current = dist[nr]
            if current is None or nd < current:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))

    logger.debug("Apery set computed", multiplicity=m, generators=generators)
    return from_coordinates(m, tuple(dist[1:]))


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """The semigroup N \\ ``gaps``, provided that set is closed under addition"""
    gap_set = set(gaps)
    if any(g <= 0 for g in gap_set):
        raise ParseError("Gaps must be positive integers")
    if not gap_set:
        return NumericalSemigroup(1, ())

    frob = max(gap_set)
    members = [x for x in range(1, frob + 1) if x not in gap_set]
    for idx, x in enumerate(members):
        for y in members[idx:]:
            if x + y > frob:
                break
            if x + y in gap_set:
                raise NotClosed(x, y)

    m = members[0] if members else frob + 1
    coords = []
    for i in range(1, m):
        w = i
        while w in gap_set:
            w += m
        coords.append(w)
    return NumericalSemigroup(m, tuple(coords))


def kunz_violation(m: int, coords: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First pair (i, j), i <= j, with w(i) + w(j) < w((i + j) mod m), if any"""
    for i in range(1, m):
        for j in range(i, m):
            k = (i + j) % m
            wk = 0 if k == 0 else coords[k - 1]
            if coords[i - 1] + coords[j - 1] < wk:
                return i, j
    return None


def from_coordinates(m: int, coords: Sequence[int]) -> NumericalSemigroup:
    """Validate a Kunz coordinate tuple and wrap it"""
    if m < 1:
        raise ParseError(f"Multiplicity must be positive, got {m}")
    values = tuple(int(c) for c in coords)
    if len(values) != m - 1:
        raise ParseError(
            f"Expected {m - 1} coordinates for m = {m}, got {len(values)}"
        )

    for i, w in enumerate(values, start=1):
        if w % m != i:
            raise BadResidue(i, w, m)
        if w <= m:
            raise BelowMultiplicity(i, w, m)

    violation = kunz_violation(m, values)
    if violation is not None:
        raise KunzViolation(*violation)
    return NumericalSemigroup(m, values)


def contains(S: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        return False
    return S.w(x) <= x


def frobenius(S: NumericalSemigroup) -> int:
    if S.m == 1:
        raise NoGaps()
    return max(S.coords) - S.m


def genus(S: NumericalSemigroup) -> int:
    # residue class i holds exactly (w(i) - i) / m gaps
    return sum((w - i) // S.m for i, w in enumerate(S.coords, start=1))


def gaps(S: NumericalSemigroup) -> List[int]:
    if S.m == 1:
        return []
    return [x for x in range(1, frobenius(S) + 1) if not contains(S, x)]


def apery_set(S: NumericalSemigroup) -> AperySet:
    return AperySet(n=S.m, elements=tuple(sorted((0,) + S.coords)))


def elements_up_to(S: NumericalSemigroup, bound: int) -> List[int]:
    return [x for x in range(0, bound + 1) if contains(S, x)]


def _check_same_multiplicity(semigroups: Sequence[NumericalSemigroup]) -> None:
    first = semigroups[0].m
    for other in semigroups[1:]:
        if other.m != first:
            raise MultiplicityMismatch(first, other.m)


def is_subset(S: NumericalSemigroup, T: NumericalSemigroup) -> bool:
    """S ⊆ T, which for equal multiplicity means T's coordinates are smaller"""
    _check_same_multiplicity([S, T])
    return all(t <= s for s, t in zip(S.coords, T.coords))


def intersect(semigroups: Sequence[NumericalSemigroup]) -> NumericalSemigroup:
    """Intersection of semigroups sharing a multiplicity (componentwise max)"""
    semigroups = list(semigroups)
    if not semigroups:
        raise EmptyList()
    _check_same_multiplicity(semigroups)

    m = semigroups[0].m
    coords = tuple(max(column) for column in zip(*(S.coords for S in semigroups)))
    result = NumericalSemigroup(m, coords)
    if m > 1:
        assert frobenius(result) == max(frobenius(S) for S in semigroups)
    return result


def max_semigroup(m: int) -> NumericalSemigroup:
    """{x >= m} ∪ {0}, the largest semigroup with multiplicity m"""
    if m < 1:
        raise ParseError(f"Multiplicity must be positive, got {m}")
    return NumericalSemigroup(m, tuple(m + i for i in range(1, m)))


def add_frobenius(S: NumericalSemigroup) -> NumericalSemigroup:
    """S ∪ {F(S)}, always a numerical semigroup"""
    frob = frobenius(S)
    if frob < S.m:
        # only {x >= m} ∪ {0}; the multiplicity drops to m - 1
        return from_gaps(x for x in gaps(S) if x != frob)
    r = frob % S.m
    coords = list(S.coords)
    coords[r - 1] -= S.m
    return from_coordinates(S.m, coords)
