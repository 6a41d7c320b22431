from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from app.semigroups.core import NumericalSemigroup, frobenius, genus


class SemigroupRequest(BaseModel):
    """Request model for operations on a single semigroup"""

    semigroup: str = Field(
        ...,
        description=(
            "Specifier: '5,7,9', 'gaps:1,2,3,4,6,8,11,13' or 'kunz:5:16,7,18,9'"
        ),
    )
    limit: Optional[int] = Field(
        None, description="Fail when an enumeration would exceed this many semigroups"
    )
    verify: bool = Field(False, description="Re-run the brute-force oracle and diff")

    @field_validator("limit")
    @classmethod
    def validate_limit(cls, v):
        """Validate that a limit, when given, is positive"""
        if v is not None and v < 1:
            raise ValueError("Limit must be positive")
        return v


class VerificationModel(BaseModel):
    """Result of comparing an answer with the brute-force oracle"""

    operation: str = Field(..., description="Operation that was verified")
    agrees: bool = Field(..., description="Whether main path and oracle agree")
    missing: List[str] = Field(default_factory=list, description="Only in oracle")
    unexpected: List[str] = Field(default_factory=list, description="Only in answer")


class SemigroupModel(BaseModel):
    """JSON form of a numerical semigroup"""

    m: int = Field(..., description="Multiplicity")
    coords: List[int] = Field(..., description="Kunz coordinates w(1), ..., w(m-1)")
    frobenius: Optional[int] = Field(None, description="Frobenius number (none for N)")
    genus: int = Field(..., description="Number of gaps")

    @classmethod
    def from_semigroup(cls, S: NumericalSemigroup) -> "SemigroupModel":
        return cls(
            m=S.m,
            coords=list(S.coords),
            frobenius=frobenius(S) if S.m > 1 else None,
            genus=genus(S),
        )


class InfoResponse(BaseModel):
    """Invariants of a semigroup"""

    semigroup: SemigroupModel
    specifier: str = Field(..., description="Canonical kunz: specifier")
    gaps: List[int] = Field(..., description="Sorted gaps")
    apery_set: List[int] = Field(..., description="Apéry set with respect to m")
    small_elements: List[int] = Field(
        ..., description="Members up to the conductor F + 1"
    )
    verification: Optional[VerificationModel] = None


class IntegerSetResponse(BaseModel):
    """A set of integers attached to a semigroup (PF, special gaps)"""

    semigroup: SemigroupModel
    elements: List[int]
    verification: Optional[VerificationModel] = None


class OversemigroupsResponse(BaseModel):
    """Oversemigroups with the same multiplicity"""

    semigroup: SemigroupModel
    count: int
    oversemigroups: List[List[int]] = Field(..., description="Coordinate tuples")
    verification: Optional[VerificationModel] = None


class BooleanResponse(BaseModel):
    """Answer to a yes/no question about a semigroup"""

    semigroup: SemigroupModel
    result: bool
    verification: Optional[VerificationModel] = None


class ClassificationResponse(BaseModel):
    """m-symmetric / m-pseudosymmetric / not m-irreducible"""

    semigroup: SemigroupModel
    label: str
    verification: Optional[VerificationModel] = None


class MinGenusResponse(BaseModel):
    m: int
    frobenius: int
    min_genus: int
    verification: Optional[VerificationModel] = None


class MaximalResponse(BaseModel):
    """Inclusion-maximal semigroups with given multiplicity and Frobenius number"""

    m: int
    frobenius: int
    maximal: List[List[int]] = Field(..., description="Coordinate tuples")
    verification: Optional[VerificationModel] = None


class DecompositionResponse(BaseModel):
    """Minimal decomposition into m-irreducible semigroups"""

    semigroup: SemigroupModel
    target: List[int] = Field(..., description="Special gaps above m")
    minimals: List[List[int]] = Field(
        ..., description="Minimal m-irreducible oversemigroups"
    )
    minimal_p_sets: List[List[int]] = Field(
        ..., description="P-sets of the minimal oversemigroups, same order"
    )
    components: List[List[int]] = Field(..., description="Chosen components")
    p_sets: List[List[int]] = Field(..., description="P-sets of the components")
    verification: Optional[VerificationModel] = None


class OperationInfo(BaseModel):
    """Model for operation information"""

    name: str = Field(..., description="Operation name")
    description: str = Field(..., description="Operation description")
    parameters: List[str] = Field(..., description="Required parameters")


class OperationsResponse(BaseModel):
    """Response model for available operations"""

    operations: List[OperationInfo] = Field(
        ..., description="List of available operations"
    )
    count: int = Field(..., description="Number of available operations")

