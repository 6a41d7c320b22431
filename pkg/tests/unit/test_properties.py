"""Randomized checks of the coordinate algorithms against the brute-force oracle.

Runs are derandomized so failures reproduce; every instance has m <= 7 and
genus <= 14 to keep the exponential oracle affordable.
"""

from functools import reduce
from math import gcd
from typing import List, Optional

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from app.semigroups import oracle
from app.semigroups.core import (
    NumericalSemigroup,
    add_frobenius,
    contains,
    from_coordinates,
    from_gaps,
    from_generators,
    frobenius,
    gaps,
    genus,
    intersect,
    is_subset,
)
from app.semigroups.decomposition import (
    decomposition_bound,
    minimal_decomposition,
    minimal_m_irreducible_oversemigroups,
)
from app.semigroups.gapsets import pseudo_frobenius, special_gaps
from app.semigroups.irreducibility import (
    FrobeniusPair,
    Shape,
    canonical_maximal,
    enumerate_maximal,
    is_irreducible,
    is_m_irreducible,
    m_irreducible_shape,
    min_genus,
)
from app.semigroups.oversemigroups import oversemigroups

MAX_GENUS = 14

oracle_settings = settings(
    derandomize=True,
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)


@st.composite
def generator_lists(draw, m: Optional[int] = None) -> List[int]:
    if m is None:
        m = draw(st.integers(min_value=2, max_value=7))
    extra = draw(
        st.lists(
            st.integers(min_value=m + 1, max_value=3 * m), min_size=1, max_size=4
        )
    )
    generators = [m] + extra
    if reduce(gcd, generators) != 1:
        generators.append(m + 1)
    return generators


@st.composite
def semigroups(
    draw, max_genus: int = MAX_GENUS, m: Optional[int] = None
) -> NumericalSemigroup:
    S = from_generators(draw(generator_lists(m)))
    assume(genus(S) <= max_genus)
    return S


@st.composite
def semigroup_triples(draw):
    m = draw(st.integers(min_value=2, max_value=7))
    return tuple(draw(semigroups(m=m)) for _ in range(3))


def closure(generators: List[int], bound: int) -> List[bool]:
    """Membership of 0..bound in the monoid spanned by ``generators``"""
    member = [False] * (bound + 1)
    member[0] = True
    for x in range(1, bound + 1):
        member[x] = any(g <= x and member[x - g] for g in generators)
    return member


class TestAgainstOracle:
    """Main paths agree with brute force"""

    @oracle_settings
    @given(generator_lists())
    def test_membership_matches_closure(self, generators):
        """Apéry-based membership agrees with sums of the generators"""
        S = from_generators(generators)
        bound = 2 * frobenius(S) + 2
        member = closure(generators, bound)
        assert [contains(S, x) for x in range(bound + 1)] == member

    @oracle_settings
    @given(semigroups())
    def test_constructor_round_trips(self, S):
        """Gap sets and coordinates rebuild the same semigroup"""
        assert from_gaps(gaps(S)) == S
        assert from_coordinates(S.m, S.coords) == S

    @oracle_settings
    @given(semigroup_triples())
    def test_intersection_laws(self, triple):
        """Intersection is commutative, associative and idempotent"""
        S, T, U = triple
        assert intersect([S, T]) == intersect([T, S])
        assert intersect([intersect([S, T]), U]) == intersect([S, intersect([T, U])])
        assert intersect([S, S]) == S
        assert is_subset(intersect([S, T]), S)
        assert set(gaps(intersect([S, T]))) == set(gaps(S)) | set(gaps(T))

    @oracle_settings
    @given(semigroups())
    def test_add_frobenius(self, S):
        """Adjoining F leaves a semigroup with exactly one gap fewer"""
        frob = frobenius(S)
        R = add_frobenius(S)
        assert from_gaps(gaps(R)) == R
        assert contains(R, frob)
        assert gaps(R) == [x for x in gaps(S) if x != frob]
        assert genus(R) == genus(S) - 1

    @oracle_settings
    @given(semigroups())
    def test_special_gaps(self, S):
        """Special gaps and pseudo-Frobenius numbers"""
        assert set(special_gaps(S)) == oracle.brute_special_gaps(S)
        assert set(pseudo_frobenius(S)) == oracle.brute_pseudo_frobenius(S)

    @oracle_settings
    @given(semigroups())
    def test_oversemigroups(self, S):
        """Oversemigroups are valid and complete"""
        found = oversemigroups(S)
        assert found == oracle.brute_oversemigroups(S)
        for T in found:
            assert from_coordinates(T.m, T.coords) == T
        assert len(found) >= 1 + len([x for x in special_gaps(S) if x > S.m])

    @oracle_settings
    @given(semigroups())
    def test_is_irreducible(self, S):
        """Irreducibility"""
        assert is_irreducible(S) == oracle.brute_is_irreducible(S)

    @settings(oracle_settings, max_examples=150)
    @given(semigroups(max_genus=10))
    def test_minimals(self, S):
        """Minimal m-irreducible oversemigroups"""
        found = minimal_m_irreducible_oversemigroups(S)
        assert found == sorted(oracle.brute_minimal_m_irreducible(S))


class TestDecompositionProperties:
    """Minimal decompositions are correct and minimum"""

    @oracle_settings
    @given(semigroups())
    def test_decomposition(self, S):
        """Components cover the target with the fewest sets"""
        result = minimal_decomposition(S)

        assert intersect(result.components) == S
        assert len(result) <= decomposition_bound(S)
        for T in result.components:
            assert is_m_irreducible(T)
            assert T in result.minimals
        for h in result.target:
            assert any(h not in T for T in result.components)

        expected = oracle.brute_min_cover(
            set(result.target), [set(p) for p in result.minimal_p_sets]
        )
        assert len(result) == max(1, expected)

    @oracle_settings
    @given(semigroups())
    def test_minimals_agree_with_oversemigroups(self, S):
        """Minimal search agrees with filtering all oversemigroups"""
        irreducible = [T for T in oversemigroups(S) if is_m_irreducible(T)]
        minimal = [
            T
            for T in irreducible
            if not any(U != T and is_subset(U, T) for U in irreducible)
        ]
        assert minimal_m_irreducible_oversemigroups(S) == minimal


class TestIrreducibilityProperties:
    """m-irreducibility, genus and shape agree"""

    @oracle_settings
    @given(semigroups())
    def test_genus_criterion(self, S):
        """m-irreducible exactly at the minimum genus"""
        pair = FrobeniusPair(S.m, frobenius(S))
        assert is_m_irreducible(S) == (genus(S) == min_genus(pair))
        assert genus(S) >= (frobenius(S) + 2) // 2
        if is_irreducible(S):
            assert is_m_irreducible(S)

    @oracle_settings
    @given(semigroups())
    def test_shapes(self, S):
        """Exactly one m-irreducible shape applies"""
        shape = m_irreducible_shape(S)
        assert (shape is not None) == is_m_irreducible(S)

        m, frob = S.m, frobenius(S)
        if shape == Shape.MAXIMUM:
            assert frob == m - 1
        elif shape == Shape.ONE_HOLE:
            assert m < frob < 2 * m
            assert S == canonical_maximal(FrobeniusPair(m, frob))
        elif shape == Shape.IRREDUCIBLE:
            assert frob > 2 * m
            assert is_irreducible(S)

    @settings(oracle_settings, max_examples=100)
    @given(
        st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=14)
    )
    def test_maximal(self, m, frob):
        """Maximal sets agree with brute force"""
        assume(frob >= m - 1 and frob % m != 0)
        pair = FrobeniusPair(m, frob)
        found = enumerate_maximal(pair)
        assert found == sorted(oracle.brute_maximal(m, frob))
        for T in found:
            assert frobenius(T) == frob
            assert genus(T) == min_genus(pair)
