"""Irreducibility with and without a fixed multiplicity.

A semigroup S with multiplicity m is m-irreducible when it is not the
intersection of two multiplicity-m semigroups properly containing it. This
happens exactly when at most one special gap exceeds m, or equivalently when
S has the least genus among semigroups with its multiplicity and Frobenius
number. The m-irreducible semigroups are:

* F = m - 1: only {x >= m} ∪ {0};
* m < F < 2m: only {x >= m, x != F} ∪ {0};
* F > 2m: the irreducible semigroups of multiplicity m and Frobenius number F.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import structlog

from app.semigroups.core import (
    NumericalSemigroup,
    from_coordinates,
    frobenius,
    genus,
    max_semigroup,
)
from app.semigroups.errors import InvalidPair, NoGaps, NotUnique
from app.semigroups.gapsets import special_gaps_above_m
from app.semigroups.oversemigroups import (
    DEFAULT_LIMIT,
    coordinate_candidates,
    expand_coordinates,
)

logger = structlog.get_logger(__name__)


class ClassificationLabel(str, Enum):
    M_SYMMETRIC = "m-symmetric"
    M_PSEUDOSYMMETRIC = "m-pseudosymmetric"
    NOT_M_IRREDUCIBLE = "not-m-irreducible"


class Shape(str, Enum):
    """The three families of m-irreducible semigroups, split by Frobenius number"""

    MAXIMUM = "maximum"
    ONE_HOLE = "one-hole"
    IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class FrobeniusPair:
    """A multiplicity and a Frobenius number realised by some semigroup"""

    m: int
    frobenius: int

    def __post_init__(self):
        if (
            self.m < 1
            or self.frobenius < 1
            or self.frobenius < self.m - 1
            or self.frobenius % self.m == 0
        ):
            raise InvalidPair(self.m, self.frobenius)

    def seed(self) -> NumericalSemigroup:
        """Multiples of m together with every integer above F"""
        m, f = self.m, self.frobenius
        coords = []
        for i in range(1, m):
            w = f + 1 + (i - f - 1) % m
            coords.append(w)
        return from_coordinates(m, coords)


def _ceil_half(frob: int) -> int:
    return (frob + 2) // 2


def is_irreducible(S: NumericalSemigroup) -> bool:
    """g(S) = ceil((F(S) + 1) / 2)"""
    return genus(S) == _ceil_half(frobenius(S))


def is_symmetric(S: NumericalSemigroup) -> bool:
    return frobenius(S) % 2 == 1 and is_irreducible(S)


def is_pseudosymmetric(S: NumericalSemigroup) -> bool:
    return frobenius(S) % 2 == 0 and is_irreducible(S)


def is_m_irreducible(S: NumericalSemigroup) -> bool:
    """At most one special gap above the multiplicity"""
    result = len(special_gaps_above_m(S)) <= 1
    assert result == (
        genus(S) in (S.m - 1, S.m, _ceil_half(frobenius(S)))
    ), f"special-gap and genus criteria disagree for {S}"
    return result


def classify(S: NumericalSemigroup) -> ClassificationLabel:
    if not is_m_irreducible(S):
        return ClassificationLabel.NOT_M_IRREDUCIBLE
    if frobenius(S) % 2 == 1:
        return ClassificationLabel.M_SYMMETRIC
    return ClassificationLabel.M_PSEUDOSYMMETRIC


def m_irreducible_shape(S: NumericalSemigroup) -> Optional[Shape]:
    """Which m-irreducible family S belongs to, or None"""
    if S.m == 1:
        raise NoGaps()
    m, frob = S.m, frobenius(S)
    if frob == m - 1:
        return Shape.MAXIMUM
    if m < frob < 2 * m:
        if S == canonical_maximal(FrobeniusPair(m, frob)):
            return Shape.ONE_HOLE
        return None
    if is_irreducible(S):
        return Shape.IRREDUCIBLE
    return None


def min_genus(pair: FrobeniusPair) -> int:
    """Least genus over semigroups with multiplicity m and Frobenius number F"""
    m, frob = pair.m, pair.frobenius
    if frob == m - 1:
        return m - 1
    if frob < 2 * m:
        return m
    return _ceil_half(frob)


def canonical_maximal(pair: FrobeniusPair) -> NumericalSemigroup:
    """The single maximal semigroup of S(m, F) when F < 2m"""
    m, frob = pair.m, pair.frobenius
    if frob > 2 * m:
        raise NotUnique(m, frob)
    S = max_semigroup(m)
    if frob == m - 1:
        return S
    coords = list(S.coords)
    coords[frob % m - 1] += m
    return from_coordinates(m, coords)


def enumerate_maximal(
    pair: FrobeniusPair,
    limit: Optional[int] = DEFAULT_LIMIT,
    threads: int = 1,
) -> List[NumericalSemigroup]:
    """All inclusion-maximal semigroups with multiplicity m and Frobenius F.

    Every such semigroup contains the seed (multiples of m plus everything
    above F), so it is an oversemigroup of the seed that keeps F as a gap.
    Within that family T is maximal exactly when its only special gap above
    m, if any, is F itself.
    """
    m, frob = pair.m, pair.frobenius
    family = expand_coordinates(
        pair.seed().coords, m, limit=limit, threads=threads, forbidden=frob
    )
    maximal = []
    for y in sorted(family):
        if all(y[i - 1] - m == frob for i in coordinate_candidates(y, m)):
            maximal.append(NumericalSemigroup(m, y))
    logger.info(
        "Maximal semigroups enumerated",
        multiplicity=m,
        frobenius=frob,
        family=len(family),
        maximal=len(maximal),
    )
    return maximal
