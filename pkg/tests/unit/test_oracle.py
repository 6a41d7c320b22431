import pytest

from app.semigroups import oracle
from app.semigroups.core import from_coordinates, from_generators, max_semigroup
from app.semigroups.errors import (
    BudgetExceeded,
    Infeasible,
    InvalidPair,
    NoGaps,
    ParseError,
)
from app.semigroups.irreducibility import FrobeniusPair
from app.semigroups.oversemigroups import oversemigroups


@pytest.fixture
def example():
    return from_coordinates(5, (16, 7, 18, 9))


class TestBruteForce:
    """Test cases for the brute-force reference implementations"""

    def test_special_gaps(self, example):
        """Test special gaps by closure checks"""
        assert oracle.brute_special_gaps(example) == {11, 13}
        assert oracle.brute_special_gaps(from_generators([5, 6, 13])) == {14}
        assert oracle.brute_special_gaps(from_coordinates(2, (3,))) == {1}

    def test_pseudo_frobenius(self, example):
        """Test pseudo-Frobenius numbers from the definition"""
        assert oracle.brute_pseudo_frobenius(example) == {11, 13}
        assert oracle.brute_pseudo_frobenius(from_generators([5, 6, 13])) == {7, 14}

    def test_oversemigroups(self, example):
        """Test subset enumeration matches the fast path"""
        assert len(oracle.brute_oversemigroups(example)) == 8
        assert oracle.brute_oversemigroups(example) == oversemigroups(example)
        assert oracle.brute_oversemigroups(max_semigroup(5)) == [max_semigroup(5)]
        assert len(oracle.brute_oversemigroups(from_coordinates(3, (4, 5)))) == 1

    def test_budget(self, example):
        """Test budgets refuse large instances"""
        budget = oracle.OracleBudget(max_gap_bound=2)
        with pytest.raises(BudgetExceeded):
            oracle.brute_oversemigroups(example, budget)

        with pytest.raises(ParseError):
            oracle.OracleBudget(max_gap_bound=0)

    def test_is_irreducible(self, example):
        """Test the gap-pair irreducibility criterion"""
        assert not oracle.brute_is_irreducible(example)
        assert oracle.brute_is_irreducible(from_coordinates(5, (11, 7, 18, 9)))
        assert oracle.brute_is_irreducible(from_coordinates(3, (7, 11)))

    def test_min_cover(self):
        """Test exhaustive minimum cover"""
        assert oracle.brute_min_cover({17, 23}, [{17}, {17}, {23}]) == 2
        assert oracle.brute_min_cover(set(), [{1}]) == 0

        with pytest.raises(Infeasible):
            oracle.brute_min_cover({1, 2}, [{1}])

    def test_min_cover_nine(self):
        """Test the m = 9 cover needs seven sets"""
        p_sets = [
            {22}, {23}, {23}, {21}, {23}, {19},
            {21}, {15}, {20}, {16}, {23}, {22},
        ]  # fmt: skip
        target = {15, 16, 19, 20, 21, 22, 23}
        assert oracle.brute_min_cover(target, p_sets) == 7

    def test_enumerate_s_m_f(self):
        """Test every semigroup with a given (m, F)"""
        assert oracle.enumerate_s_m_f(5, 4) == [max_semigroup(5)]
        assert oracle.enumerate_s_m_f(3, 4) == [from_coordinates(3, (7, 5))]

        with pytest.raises(InvalidPair):
            oracle.enumerate_s_m_f(5, 10)

    def test_maximal(self):
        """Test inclusion-maximal members of S(5, 7)"""
        assert oracle.brute_maximal(5, 7) == [from_coordinates(5, (6, 12, 8, 9))]

    def test_minimal_m_irreducible(self, example):
        """Test inclusion-minimal m-irreducible oversemigroups"""
        found = oracle.brute_minimal_m_irreducible(example)
        assert {T.coords for T in found} == {(11, 7, 18, 9), (16, 7, 8, 9)}

    def test_gaps(self, example):
        """Test gaps as non-sums of m and the Apéry elements"""
        assert oracle.brute_gaps(example) == [1, 2, 3, 4, 6, 8, 11, 13]
        assert oracle.brute_gaps(from_coordinates(3, (7, 5))) == [1, 2, 4]
        assert oracle.brute_gaps(from_generators([1])) == []

    def test_classify(self, example):
        """Test classification from the brute-force tests"""
        assert oracle.brute_classify(example) == "not-m-irreducible"
        symmetric = from_coordinates(5, (16, 7, 8, 9))
        assert oracle.brute_classify(symmetric) == "m-symmetric"
        assert oracle.brute_classify(max_semigroup(5)) == "m-pseudosymmetric"

        with pytest.raises(NoGaps):
            oracle.brute_classify(from_generators([1]))

    def test_min_genus(self):
        """Test minimum genus over all semigroups with a pair"""
        assert oracle.brute_min_genus(5, 4) == 4
        assert oracle.brute_min_genus(5, 7) == 5
        assert oracle.brute_min_genus(5, 13) == 7


class TestVerify:
    """Test cases for comparing answers with the oracle"""

    def test_agrees(self, example):
        """Test agreeing and disagreeing verdicts"""
        report = oracle.verify("special-gaps", [11, 13], S=example)
        assert report.agrees

        report = oracle.verify("maximal", [], pair=FrobeniusPair(5, 7))
        assert not report.agrees
        assert report.missing == ["kunz:5:6,12,8,9"]

    def test_disagrees(self, example):
        """Test missing and unexpected entries"""
        report = oracle.verify("special-gaps", [11, 12], S=example)
        assert not report.agrees
        assert report.missing == ["13"]
        assert report.unexpected == ["12"]

    def test_booleans(self, example):
        """Test yes/no operations compare as one-element sets"""
        assert oracle.verify("irreducible", [False], S=example).agrees
        assert not oracle.verify("m-irreducible", [True], S=example).agrees

    def test_info_classify_and_min_genus(self, example):
        """Test gaps, labels and minimum genus verdicts"""
        assert oracle.verify("info", [1, 2, 3, 4, 6, 8, 11, 13], S=example).agrees
        assert oracle.verify("classify", ["not-m-irreducible"], S=example).agrees
        assert not oracle.verify("classify", ["m-symmetric"], S=example).agrees

        report = oracle.verify("min-genus", [6], pair=FrobeniusPair(5, 13))
        assert report.missing == ["7"]
        assert report.unexpected == ["6"]

    def test_unknown_operation(self, example):
        """Test an operation without an oracle"""
        with pytest.raises(ParseError):
            oracle.verify("frobenius", [13], S=example)
