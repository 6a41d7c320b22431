import structlog
from fastapi import APIRouter, HTTPException, Query

from app.api.models.semigroup import (
    BooleanResponse,
    ClassificationResponse,
    DecompositionResponse,
    InfoResponse,
    IntegerSetResponse,
    MaximalResponse,
    MinGenusResponse,
    OperationInfo,
    OperationsResponse,
    OversemigroupsResponse,
    SemigroupRequest,
)
from app.api.services.semigroup_service import semigroup_service
from app.api.utils.logger import LoggerMixin
from app.semigroups.errors import SemigroupError

router = APIRouter()
logger = structlog.get_logger()


def _run(operation: str, call, *args, **kwargs):
    """Run a service call, mapping domain errors to 400 and the rest to 500"""
    try:
        return call(*args, **kwargs)
    except SemigroupError as e:
        raise HTTPException(
            status_code=400, detail={"error": e.name, "message": str(e)}
        )
    except Exception as e:
        logger.error(
            "Semigroup operation error",
            operation=operation,
            error_type=type(e).__name__,
            error=str(e),
        )
        raise HTTPException(status_code=500, detail="Internal server error")


class SemigroupRouter(LoggerMixin):
    """Semigroup operations router"""

    # plain def: FastAPI runs these in its threadpool, off the event loop

    @router.post("/info", response_model=InfoResponse)
    def info(request: SemigroupRequest):
        """Multiplicity, Frobenius number, genus, gaps and Apéry set"""
        return _run(
            "info", semigroup_service.info, request.semigroup, verify=request.verify
        )

    @router.post("/pseudo-frobenius", response_model=IntegerSetResponse)
    def pseudo_frobenius(request: SemigroupRequest):
        """Pseudo-Frobenius numbers"""
        return _run(
            "pf",
            semigroup_service.pseudo_frobenius,
            request.semigroup,
            verify=request.verify,
        )

    @router.post("/special-gaps", response_model=IntegerSetResponse)
    def special_gaps(request: SemigroupRequest):
        """Gaps whose adjunction keeps a semigroup"""
        return _run(
            "special-gaps",
            semigroup_service.special_gaps,
            request.semigroup,
            verify=request.verify,
        )

    @router.post("/oversemigroups", response_model=OversemigroupsResponse)
    def oversemigroups(request: SemigroupRequest):
        """Oversemigroups with the same multiplicity"""
        return _run(
            "oversemigroups",
            semigroup_service.oversemigroups,
            request.semigroup,
            limit=request.limit,
            verify=request.verify,
        )

    @router.post("/irreducible", response_model=BooleanResponse)
    def irreducible(request: SemigroupRequest):
        return _run(
            "irreducible",
            semigroup_service.irreducible,
            request.semigroup,
            verify=request.verify,
        )

    @router.post("/m-irreducible", response_model=BooleanResponse)
    def m_irreducible(request: SemigroupRequest):
        return _run(
            "m-irreducible",
            semigroup_service.m_irreducible,
            request.semigroup,
            verify=request.verify,
        )

    @router.post("/classify", response_model=ClassificationResponse)
    def classify(request: SemigroupRequest):
        return _run(
            "classify",
            semigroup_service.classify,
            request.semigroup,
            verify=request.verify,
        )

    @router.post("/decompose", response_model=DecompositionResponse)
    def decompose(request: SemigroupRequest):
        """Minimal decomposition into m-irreducible semigroups"""
        return _run(
            "decompose",
            semigroup_service.decompose,
            request.semigroup,
            verify=request.verify,
        )

    @router.get("/min-genus", response_model=MinGenusResponse)
    def min_genus(
        m: int = Query(..., ge=1), frobenius: int = Query(...), verify: bool = False
    ):
        """Smallest genus of a semigroup with this multiplicity and Frobenius number"""
        return _run(
            "min-genus", semigroup_service.min_genus, m, frobenius, verify=verify
        )

    @router.get("/maximal", response_model=MaximalResponse)
    def maximal(
        m: int = Query(..., ge=1), frobenius: int = Query(...), verify: bool = False
    ):
        """Inclusion-maximal semigroups with this multiplicity and Frobenius number"""
        return _run("maximal", semigroup_service.maximal, m, frobenius, verify=verify)

    @router.get("/operations", response_model=OperationsResponse)
    async def get_operations():
        """Get list of supported operations"""
        operations = [
            OperationInfo(
                name="info",
                description="Multiplicity, Frobenius number, genus, gaps, Apéry set",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="pseudo-frobenius",
                description="Pseudo-Frobenius numbers",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="special-gaps",
                description="Gaps x such that S ∪ {x} is a semigroup",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="oversemigroups",
                description="Oversemigroups with the same multiplicity",
                parameters=["semigroup", "limit", "verify"],
            ),
            OperationInfo(
                name="irreducible",
                description="Whether the semigroup is irreducible",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="m-irreducible",
                description="Whether S is irreducible within multiplicity m",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="classify",
                description="m-symmetric, m-pseudosymmetric or not m-irreducible",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="decompose",
                description="Fewest m-irreducible semigroups intersecting to S",
                parameters=["semigroup", "verify"],
            ),
            OperationInfo(
                name="min-genus",
                description="Least genus for a multiplicity and Frobenius number",
                parameters=["m", "frobenius", "verify"],
            ),
            OperationInfo(
                name="maximal",
                description="Maximal semigroups with given multiplicity and Frobenius",
                parameters=["m", "frobenius", "verify"],
            ),
        ]

        return OperationsResponse(operations=operations, count=len(operations))


# Create router instance
semigroup_router = SemigroupRouter()
