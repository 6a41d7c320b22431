"""Pseudo-Frobenius numbers and special gaps read off the Apéry set.

Both sets come from the maximal elements of the Apéry set under the order
a <=_S b iff b - a ∈ S: w(i) is maximal when no w(k) - w(i) (k != i) is itself
an Apéry element. Shifting the maximals down by m gives PF(S); the special
gaps are the pseudo-Frobenius numbers x whose double 2x is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from app.semigroups.core import NumericalSemigroup, contains
from app.semigroups.errors import NoGaps


@dataclass(frozen=True)
class PseudoFrobeniusSet:
    elements: Tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


@dataclass(frozen=True)
class SpecialGapSet:
    """Gaps x such that S ∪ {x} is again a numerical semigroup"""

    elements: Tuple[int, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


def precedes(S: NumericalSemigroup, a: int, b: int) -> bool:
    """a <=_S b"""
    return contains(S, b - a)


def maximal_indices(coords: Sequence[int]) -> List[int]:
    """Residues i whose w(i) is maximal in the Apéry set under <=_S"""
    values = set(coords)
    result = []
    for i, wi in enumerate(coords, start=1):
        if all((wk - wi) not in values for wk in coords if wk != wi):
            result.append(i)
    return result


def special_gap_indices(m: int, coords: Sequence[int]) -> List[int]:
    """Residues i for which x = w(i) - m is a special gap.

    x is pseudo-Frobenius when w(i) is maximal; it is special when also
    2x >= w(2x mod m), reading w(0) = 0.
    """
    result = []
    for i in maximal_indices(coords):
        double = 2 * (coords[i - 1] - m)
        r = double % m
        if double >= (0 if r == 0 else coords[r - 1]):
            result.append(i)
    return result


def _require_gaps(S: NumericalSemigroup) -> None:
    if S.m == 1:
        raise NoGaps()


def apery_maximals(S: NumericalSemigroup) -> Tuple[int, ...]:
    _require_gaps(S)
    return tuple(sorted(S.coords[i - 1] for i in maximal_indices(S.coords)))


def pseudo_frobenius(S: NumericalSemigroup) -> PseudoFrobeniusSet:
    return PseudoFrobeniusSet(tuple(w - S.m for w in apery_maximals(S)))


def special_gaps(S: NumericalSemigroup) -> SpecialGapSet:
    _require_gaps(S)
    indices = special_gap_indices(S.m, S.coords)
    return SpecialGapSet(tuple(sorted(S.coords[i - 1] - S.m for i in indices)))


def special_gaps_above_m(S: NumericalSemigroup) -> SpecialGapSet:
    return SpecialGapSet(tuple(x for x in special_gaps(S) if x > S.m))
