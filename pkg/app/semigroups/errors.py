"""Domain errors raised by the semigroup library.

Every error derives from ``SemigroupError`` (a ``ValueError``) so callers that
only care about "bad input" can catch one type. The class name is what the CLI
prints on the diagnostic stream and what the HTTP service returns as ``error``.
"""

from typing import Optional


class SemigroupError(ValueError):
    """Base class for all domain errors"""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(SemigroupError):
    """A text specifier could not be parsed"""


class EmptyGenerators(SemigroupError):
    def __init__(self):
        super().__init__("At least one generator is required")


class NotCofinite(SemigroupError):
    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(
            f"Generators have gcd {gcd}; their complement in N is infinite"
        )


class NotClosed(SemigroupError):
    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"{x} and {y} are members but {x + y} is listed as a gap")


class BadResidue(SemigroupError):
    def __init__(self, i: int, value: int, m: int):
        self.i = i
        super().__init__(f"Coordinate w({i}) = {value} is not congruent to {i} mod {m}")


class BelowMultiplicity(SemigroupError):
    def __init__(self, i: int, value: int, m: int):
        self.i = i
        super().__init__(f"Coordinate w({i}) = {value} does not exceed m = {m}")


class KunzViolation(SemigroupError):
    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j
        super().__init__(
            f"w({i}) + w({j}) is smaller than the coordinate of residue {i} + {j}"
        )


class NoGaps(SemigroupError):
    def __init__(self):
        super().__init__("The semigroup N has no gaps and no Frobenius number")


class MultiplicityMismatch(SemigroupError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Multiplicities differ: {left} != {right}")


class EmptyList(SemigroupError):
    def __init__(self):
        super().__init__("Cannot intersect an empty list of semigroups")


class InvalidPair(SemigroupError):
    def __init__(self, m: int, frobenius: int):
        self.m = m
        self.frobenius = frobenius
        super().__init__(
            f"No semigroup has multiplicity {m} and Frobenius number {frobenius}: "
            "F must be at least m - 1 and not a multiple of m"
        )


class NotUnique(SemigroupError):
    def __init__(self, m: int, frobenius: int):
        super().__init__(
            f"Maximal semigroups for (m={m}, F={frobenius}) are not unique when F > 2m"
        )


class NotSpecialGap(SemigroupError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"{x} is not a special gap")


class NotAboveMultiplicity(SemigroupError):
    def __init__(self, x: int, m: int):
        self.x = x
        super().__init__(f"{x} does not exceed the multiplicity {m}")


class LimitExceeded(SemigroupError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"Enumeration exceeded the limit of {limit} semigroups")


class NotOversemigroup(SemigroupError):
    def __init__(self, detail: Optional[str] = None):
        super().__init__(detail or "Second semigroup does not contain the first")


class BudgetExceeded(SemigroupError):
    def __init__(self, what: str, value: int, budget: int):
        self.budget = budget
        super().__init__(f"Oracle budget exceeded: {what} = {value} > {budget}")


class Infeasible(SemigroupError):
    def __init__(self, uncovered):
        self.uncovered = sorted(uncovered)
        super().__init__(f"No choice of sets covers {self.uncovered}")
