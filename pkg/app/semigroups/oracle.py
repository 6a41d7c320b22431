"""Brute-force reference implementations.

Everything here follows the definitions directly (closure checks over explicit
element sets, exhaustive subset enumeration) and is exponential. It exists to
check the coordinate-based algorithms, both in the test suite and behind the
CLI's ``--verify`` flag. Each entry point refuses instances above its budget
instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set

import structlog

from app.semigroups.core import (
    NumericalSemigroup,
    apery_set,
    contains,
    from_gaps,
    frobenius,
    gaps,
    is_subset,
)
from app.semigroups.errors import (
    BudgetExceeded,
    Infeasible,
    NoGaps,
    NotClosed,
    ParseError,
)
from app.semigroups.irreducibility import ClassificationLabel, FrobeniusPair

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class OracleBudget:
    max_gap_bound: int = 20
    max_subsets: int = 2_000_000

    def __post_init__(self):
        if self.max_gap_bound <= 0 or self.max_subsets <= 0:
            raise ParseError("Oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _member_mask(S: NumericalSemigroup, bound: int) -> int:
    mask = 0
    for x in range(bound + 1):
        if contains(S, x):
            mask |= 1 << x
    return mask


def _is_closed(mask: int, bound: int) -> bool:
    """Whether the members encoded in ``mask`` (plus all of (bound, ∞)) add up"""
    full = (1 << (bound + 1)) - 1
    for a in range(1, bound + 1):
        if mask >> a & 1 and (mask << a) & full & ~mask:
            return False
    return True


def brute_gaps(S: NumericalSemigroup) -> List[int]:
    """Numbers up to F that are no sum of m and the nonzero Apéry elements"""
    if S.m == 1:
        return []
    bound = frobenius(S)
    generators = [S.m] + [w for w in apery_set(S) if w]
    reachable = 1
    for x in range(1, bound + 1):
        if any(g <= x and reachable >> (x - g) & 1 for g in generators):
            reachable |= 1 << x
    return [x for x in range(1, bound + 1) if not reachable >> x & 1]

def brute_pseudo_frobenius(S: NumericalSemigroup) -> FrozenSet[int]:
    """Gaps x with x + s ∈ S for every nonzero member s up to F(S) + m"""
    bound = frobenius(S) + S.m
    members = [s for s in range(1, bound + 1) if contains(S, s)]
    return frozenset(
        x for x in gaps(S) if all(contains(S, x + s) for s in members)
    )


def brute_special_gaps(S: NumericalSemigroup) -> FrozenSet[int]:
    """Gaps x for which N minus the other gaps is still closed"""
    gap_list = gaps(S)
    special = set()
    for x in gap_list:
        try:
            from_gaps(g for g in gap_list if g != x)
        except NotClosed:
            continue
        special.add(x)
    return frozenset(special)


def brute_oversemigroups(
    S: NumericalSemigroup, budget: OracleBudget = DEFAULT_BUDGET
) -> List[NumericalSemigroup]:
    """Every S ∪ X closed under addition, X ranging over sets of gaps above m"""
    if S.m == 1:
        return [S]
    free = [x for x in gaps(S) if x > S.m]
    if len(free) > budget.max_gap_bound:
        raise BudgetExceeded("free gaps", len(free), budget.max_gap_bound)
    if 2 ** len(free) > budget.max_subsets:
        raise BudgetExceeded("subsets", 2 ** len(free), budget.max_subsets)

    bound = frobenius(S)
    base = _member_mask(S, bound)
    all_gaps = gaps(S)
    found = []
    for choice in range(1 << len(free)):
        added = {x for k, x in enumerate(free) if choice >> k & 1}
        mask = base
        for x in added:
            mask |= 1 << x
        if _is_closed(mask, bound):
            found.append(from_gaps(g for g in all_gaps if g not in added))
    return sorted(found)


def brute_is_irreducible(S: NumericalSemigroup) -> bool:
    """No gap x, x != F/2, whose partner F - x is also a gap"""
    frob = frobenius(S)
    gap_set = set(gaps(S))
    return not any(
        (frob - x) in gap_set for x in gap_set if 2 * x != frob
    )


def brute_min_cover(target: Set[int], p_sets: Sequence[Set[int]]) -> int:
    """Least number of ``p_sets`` whose union contains ``target``"""
    target = set(target)
    if not target:
        return 0
    union = set().union(*p_sets) if p_sets else set()
    if not target <= union:
        raise Infeasible(target - union)
    for k in range(1, len(p_sets) + 1):
        for combo in combinations(p_sets, k):
            if target <= set().union(*combo):
                return k
    raise Infeasible(target)


def enumerate_s_m_f(
    m: int, frob: int, budget: OracleBudget = DEFAULT_BUDGET
) -> List[NumericalSemigroup]:
    """Every semigroup with multiplicity m and Frobenius number F"""
    FrobeniusPair(m, frob)
    seed = from_gaps(x for x in range(1, frob + 1) if x % m != 0)
    return [T for T in brute_oversemigroups(seed, budget) if frobenius(T) == frob]


def _inclusion_maximal(family: List[NumericalSemigroup]) -> List[NumericalSemigroup]:
    return [
        T
        for T in family
        if not any(U != T and is_subset(T, U) for U in family)
    ]


def _inclusion_minimal(family: List[NumericalSemigroup]) -> List[NumericalSemigroup]:
    return [
        T
        for T in family
        if not any(U != T and is_subset(U, T) for U in family)
    ]


def brute_maximal(
    m: int, frob: int, budget: OracleBudget = DEFAULT_BUDGET
) -> List[NumericalSemigroup]:
    return _inclusion_maximal(enumerate_s_m_f(m, frob, budget))


def brute_m_irreducible(T: NumericalSemigroup) -> bool:
    """At most one brute-force special gap above the multiplicity"""
    return len([x for x in brute_special_gaps(T) if x > T.m]) <= 1


def brute_classify(S: NumericalSemigroup) -> str:
    """Label from the brute-force m-irreducibility test and the parity of F"""
    if S.m == 1:
        raise NoGaps()
    if not brute_m_irreducible(S):
        return ClassificationLabel.NOT_M_IRREDUCIBLE.value
    if max(brute_gaps(S)) % 2 == 1:
        return ClassificationLabel.M_SYMMETRIC.value
    return ClassificationLabel.M_PSEUDOSYMMETRIC.value


def brute_min_genus(m: int, frob: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Fewest gaps among all semigroups with multiplicity m and Frobenius F"""
    return min(len(gaps(T)) for T in enumerate_s_m_f(m, frob, budget))


def brute_minimal_m_irreducible(
    S: NumericalSemigroup, budget: OracleBudget = DEFAULT_BUDGET
) -> List[NumericalSemigroup]:
    family = [T for T in brute_oversemigroups(S, budget) if brute_m_irreducible(T)]
    return _inclusion_minimal(family)


@dataclass
class VerificationReport:
    """Outcome of re-running an operation through the oracle"""

    operation: str
    missing: List[str]
    unexpected: List[str]

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.unexpected


def _compare(operation: str, expected, actual) -> VerificationReport:
    expected_set = {str(x) for x in expected}
    actual_set = {str(x) for x in actual}
    return VerificationReport(
        operation=operation,
        missing=sorted(expected_set - actual_set),
        unexpected=sorted(actual_set - expected_set),
    )


def verify(
    operation: str,
    actual,
    S: Optional[NumericalSemigroup] = None,
    pair: Optional[FrobeniusPair] = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> VerificationReport:
    """Compare ``actual`` (the main-path answer) with the oracle's.

    Sets and lists are compared as sets of their string forms; scalars are
    compared as one-element sets.
    """
    references: Dict[str, Callable[[], object]] = {
        "info": lambda: brute_gaps(S),
        "pf": lambda: brute_pseudo_frobenius(S),
        "special-gaps": lambda: brute_special_gaps(S),
        "oversemigroups": lambda: brute_oversemigroups(S, budget),
        "irreducible": lambda: [brute_is_irreducible(S)],
        "m-irreducible": lambda: [brute_m_irreducible(S)],
        "classify": lambda: [brute_classify(S)],
        "min-genus": lambda: [brute_min_genus(pair.m, pair.frobenius, budget)],
        "maximal": lambda: brute_maximal(pair.m, pair.frobenius, budget),
        "minimals": lambda: brute_minimal_m_irreducible(S, budget),
    }
    if operation not in references:
        raise ParseError(f"No oracle for operation {operation!r}")
    report = _compare(operation, references[operation](), actual)
    logger.info(
        "Oracle verification finished",
        operation=operation,
        agrees=report.agrees,
        missing=report.missing,
        unexpected=report.unexpected,
    )
    return report
