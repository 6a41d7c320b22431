import pytest

from app.semigroups.core import (
    NumericalSemigroup,
    add_frobenius,
    apery_set,
    contains,
    elements_up_to,
    from_coordinates,
    from_gaps,
    from_generators,
    frobenius,
    gaps,
    genus,
    intersect,
    is_subset,
    max_semigroup,
)
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


@pytest.fixture
def example():
    """{0, 5, 7, 9, 10, 12, 14, ->}"""
    return from_coordinates(5, (16, 7, 18, 9))


class TestConstructors:
    """Test cases for building semigroups"""

    def test_from_generators(self):
        """Test building from generators in any order"""
        assert from_generators([5, 7, 9]) == NumericalSemigroup(5, (16, 7, 18, 9))
        assert from_generators([9, 7, 5, 7]).coords == (16, 7, 18, 9)
        assert from_generators([5, 6, 13]).coords == (6, 12, 13, 19)

    def test_from_generators_trivial(self):
        """Test that <1> is N with no coordinates"""
        S = from_generators([1])
        assert S.m == 1
        assert S.coords == ()
        assert genus(S) == 0

    def test_from_generators_errors(self):
        """Test empty and non-cofinite generator sets"""
        with pytest.raises(EmptyGenerators):
            from_generators([])

        with pytest.raises(NotCofinite) as exc:
            from_generators([4, 6])
        assert exc.value.gcd == 2

    def test_from_gaps(self, example):
        """Test building from a gap set"""
        assert from_gaps([1, 2, 3, 4, 6, 8, 11, 13]) == example
        assert from_gaps([1, 2, 4]) == NumericalSemigroup(3, (7, 5))
        assert from_gaps([]).m == 1

    def test_from_gaps_not_closed(self):
        """Test a gap set whose complement is not closed"""
        with pytest.raises(NotClosed) as exc:
            from_gaps([1, 2, 4, 6])
        assert (exc.value.x, exc.value.y) == (3, 3)

    def test_from_coordinates(self, example):
        """Test building from Kunz coordinates"""
        assert from_coordinates(5, [16, 7, 18, 9]) == example
        assert from_coordinates(5, (6, 7, 8, 9)) == max_semigroup(5)

    def test_from_coordinates_errors(self):
        """Test each coordinate validation error"""
        with pytest.raises(ParseError):
            from_coordinates(5, (16, 7, 18))

        with pytest.raises(BadResidue) as exc:
            from_coordinates(5, (17, 7, 18, 9))
        assert exc.value.i == 1

        with pytest.raises(BelowMultiplicity):
            from_coordinates(5, (1, 7, 18, 9))

        with pytest.raises(KunzViolation) as exc:
            from_coordinates(5, (6, 7, 13, 19))
        assert (exc.value.i, exc.value.j) == (2, 2)

    def test_residue_checked_before_closure(self):
        """7 sits in the third slot, so the residue check fires first"""
        with pytest.raises(BadResidue) as exc:
            from_coordinates(5, (6, 12, 7, 19))
        assert exc.value.i == 3


class TestInvariants:
    """Test cases for membership, Frobenius number, genus and gaps"""

    def test_contains(self, example):
        """Test membership"""
        assert contains(example, 12)
        assert not contains(example, 13)
        assert contains(example, 0)
        assert not contains(example, -1)
        assert 14 in example
        assert 11 not in example

    def test_frobenius(self, example):
        """Test Frobenius number"""
        assert frobenius(example) == 13
        assert frobenius(from_coordinates(9, (28, 29, 30, 31, 32, 24, 25, 17))) == 23

        with pytest.raises(NoGaps):
            frobenius(from_generators([1]))

    def test_genus_and_gaps(self, example):
        """Test genus equals the number of gaps"""
        assert genus(example) == 8
        assert gaps(example) == [1, 2, 3, 4, 6, 8, 11, 13]
        assert genus(example) == len(gaps(example))

    def test_apery_set(self, example):
        """Test Apéry set with respect to m"""
        assert list(apery_set(example)) == [0, 7, 9, 16, 18]
        assert 16 in apery_set(example)
        assert len(apery_set(example)) == 5

    def test_elements_up_to(self, example):
        """Test members up to a bound"""
        assert elements_up_to(example, 14) == [0, 5, 7, 9, 10, 12, 14]

    def test_str(self, example):
        """Test the canonical specifier"""
        assert str(example) == "kunz:5:16,7,18,9"


class TestLattice:
    """Test cases for inclusion and intersection"""

    def test_is_subset(self, example):
        """Test inclusion"""
        bigger = from_coordinates(5, (11, 7, 18, 9))
        assert is_subset(example, bigger)
        assert not is_subset(bigger, example)
        assert is_subset(example, example)

    def test_is_subset_mismatch(self, example):
        """Test inclusion across multiplicities"""
        with pytest.raises(MultiplicityMismatch):
            is_subset(example, max_semigroup(4))

    def test_intersect(self, example):
        """Test intersection as a coordinatewise maximum"""
        left = from_coordinates(5, (11, 22, 13, 9))
        right = from_coordinates(5, (11, 17, 28, 14))
        assert intersect([left, right]).coords == (11, 22, 28, 14)

        parts = [
            from_coordinates(5, (11, 7, 18, 9)),
            from_coordinates(5, (16, 7, 8, 9)),
        ]
        assert intersect(parts) == example
        assert intersect([example]) == example

    def test_intersect_errors(self, example):
        """Test empty and mixed-multiplicity intersections"""
        with pytest.raises(EmptyList):
            intersect([])

        with pytest.raises(MultiplicityMismatch):
            intersect([example, max_semigroup(6)])

    def test_max_semigroup(self):
        """Test the largest semigroup of multiplicity m"""
        assert max_semigroup(5).coords == (6, 7, 8, 9)
        assert frobenius(max_semigroup(5)) == 4

    def test_add_frobenius(self, example):
        """Test adjoining the Frobenius number"""
        assert add_frobenius(example).coords == (16, 7, 13, 9)

    def test_add_frobenius_drops_multiplicity(self):
        """Test adjoining m - 1 to the maximum semigroup"""
        assert add_frobenius(max_semigroup(5)) == NumericalSemigroup(4, (5, 6, 7))
