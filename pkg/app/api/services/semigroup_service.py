import time
from contextlib import contextmanager
from typing import Optional

from app.api.models.semigroup import (
    BooleanResponse,
    ClassificationResponse,
    DecompositionResponse,
    InfoResponse,
    IntegerSetResponse,
    MaximalResponse,
    MinGenusResponse,
    OversemigroupsResponse,
    SemigroupModel,
    VerificationModel,
)
from app.api.utils.config import config as settings
from app.api.utils.logger import LoggerMixin
from app.api.utils.metrics import (
    FRONTIER_SIZE,
    SEMIGROUP_OPERATION_COUNT,
    SEMIGROUP_OPERATION_LATENCY,
)
from app.semigroups import oracle
from app.semigroups.core import (
    NumericalSemigroup,
    apery_set,
    elements_up_to,
    frobenius,
    gaps,
)
from app.semigroups.decomposition import minimal_decomposition
from app.semigroups.errors import SemigroupError
from app.semigroups.gapsets import pseudo_frobenius, special_gaps
from app.semigroups.irreducibility import (
    FrobeniusPair,
    classify,
    enumerate_maximal,
    is_irreducible,
    is_m_irreducible,
    min_genus,
)
from app.semigroups.oversemigroups import oversemigroups
from app.semigroups.parsing import format_semigroup, parse_semigroup


def _verification(report: oracle.VerificationReport) -> VerificationModel:
    return VerificationModel(
        operation=report.operation,
        agrees=report.agrees,
        missing=report.missing,
        unexpected=report.unexpected,
    )


class SemigroupService(LoggerMixin):
    """Service for semigroup operations, shared by the CLI and the HTTP routes"""

    def __init__(
        self,
        limit: Optional[int] = None,
        threads: Optional[int] = None,
        budget: Optional[oracle.OracleBudget] = None,
    ):
        self.limit = limit or settings.OVERSEMIGROUP_LIMIT
        self.threads = threads or settings.FRONTIER_THREADS
        self.budget = budget or oracle.OracleBudget(
            max_gap_bound=settings.ORACLE_MAX_GAP_BOUND,
            max_subsets=settings.ORACLE_MAX_SUBSETS,
        )

    @contextmanager
    def _observe(self, operation: str, **context):
        """Record metrics and a log line for one operation"""
        start_time = time.time()
        try:
            yield
        except Exception as e:
            duration = time.time() - start_time
            SEMIGROUP_OPERATION_COUNT.labels(operation=operation, status="error").inc()
            SEMIGROUP_OPERATION_LATENCY.labels(operation=operation).observe(duration)

            log = (
                self.logger.warning
                if isinstance(e, SemigroupError)
                else self.logger.error
            )
            log(
                "Semigroup operation failed",
                operation=operation,
                error_type=type(e).__name__,
                error=str(e),
                **context,
            )
            raise
        else:
            duration = time.time() - start_time
            SEMIGROUP_OPERATION_COUNT.labels(
                operation=operation, status="success"
            ).inc()
            SEMIGROUP_OPERATION_LATENCY.labels(operation=operation).observe(duration)

            self.logger.info(
                "Semigroup operation completed",
                operation=operation,
                duration=round(duration, 4),
                **context,
            )

    def parse(self, text: str) -> NumericalSemigroup:
        with self._observe("parse", text=text):
            return parse_semigroup(text)

    def info(self, text: str, verify: bool = False) -> InfoResponse:
        S = self.parse(text)
        with self._observe("info", semigroup=str(S)):
            conductor = frobenius(S) + 1 if S.m > 1 else 0
            gap_list = gaps(S)
            report = oracle.verify("info", gap_list, S=S) if verify else None
            return InfoResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                specifier=format_semigroup(S),
                gaps=gap_list,
                apery_set=list(apery_set(S)),
                small_elements=elements_up_to(S, conductor),
                verification=_verification(report) if report else None,
            )

    def pseudo_frobenius(self, text: str, verify: bool = False) -> IntegerSetResponse:
        S = self.parse(text)
        with self._observe("pf", semigroup=str(S)):
            elements = list(pseudo_frobenius(S))
            report = oracle.verify("pf", elements, S=S) if verify else None
            return IntegerSetResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                elements=elements,
                verification=_verification(report) if report else None,
            )

    def special_gaps(self, text: str, verify: bool = False) -> IntegerSetResponse:
        S = self.parse(text)
        with self._observe("special-gaps", semigroup=str(S)):
            elements = list(special_gaps(S))
            report = oracle.verify("special-gaps", elements, S=S) if verify else None
            return IntegerSetResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                elements=elements,
                verification=_verification(report) if report else None,
            )

    def oversemigroups(
        self, text: str, limit: Optional[int] = None, verify: bool = False
    ) -> OversemigroupsResponse:
        S = self.parse(text)
        with self._observe("oversemigroups", semigroup=str(S)):
            found = oversemigroups(S, limit=limit or self.limit, threads=self.threads)
            FRONTIER_SIZE.labels(kind="oversemigroups").observe(len(found))
            report = (
                oracle.verify("oversemigroups", found, S=S, budget=self.budget)
                if verify
                else None
            )
            return OversemigroupsResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                count=len(found),
                oversemigroups=[list(T.coords) for T in found],
                verification=_verification(report) if report else None,
            )

    def irreducible(self, text: str, verify: bool = False) -> BooleanResponse:
        S = self.parse(text)
        with self._observe("irreducible", semigroup=str(S)):
            result = is_irreducible(S)
            report = oracle.verify("irreducible", [result], S=S) if verify else None
            return BooleanResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                result=result,
                verification=_verification(report) if report else None,
            )

    def m_irreducible(self, text: str, verify: bool = False) -> BooleanResponse:
        S = self.parse(text)
        with self._observe("m-irreducible", semigroup=str(S)):
            result = is_m_irreducible(S)
            report = oracle.verify("m-irreducible", [result], S=S) if verify else None
            return BooleanResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                result=result,
                verification=_verification(report) if report else None,
            )

    def classify(self, text: str, verify: bool = False) -> ClassificationResponse:
        S = self.parse(text)
        with self._observe("classify", semigroup=str(S)):
            label = classify(S).value
            report = oracle.verify("classify", [label], S=S) if verify else None
            return ClassificationResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                label=label,
                verification=_verification(report) if report else None,
            )

    def min_genus(self, m: int, frob: int, verify: bool = False) -> MinGenusResponse:
        with self._observe("min-genus", m=m, frobenius=frob):
            pair = FrobeniusPair(m, frob)
            value = min_genus(pair)
            report = (
                oracle.verify("min-genus", [value], pair=pair, budget=self.budget)
                if verify
                else None
            )
            return MinGenusResponse(
                m=m,
                frobenius=frob,
                min_genus=value,
                verification=_verification(report) if report else None,
            )

    def maximal(self, m: int, frob: int, verify: bool = False) -> MaximalResponse:
        with self._observe("maximal", m=m, frobenius=frob):
            pair = FrobeniusPair(m, frob)
            found = enumerate_maximal(pair, limit=self.limit, threads=self.threads)
            FRONTIER_SIZE.labels(kind="maximal").observe(len(found))
            report = (
                oracle.verify("maximal", found, pair=pair, budget=self.budget)
                if verify
                else None
            )
            return MaximalResponse(
                m=m,
                frobenius=frob,
                maximal=[list(T.coords) for T in found],
                verification=_verification(report) if report else None,
            )

    def decompose(self, text: str, verify: bool = False) -> DecompositionResponse:
        S = self.parse(text)
        with self._observe("decompose", semigroup=str(S)):
            result = minimal_decomposition(
                S, threads=self.threads, limit=self.limit
            )
            FRONTIER_SIZE.labels(kind="minimals").observe(len(result.minimals))

            report = None
            if verify:
                report = oracle.verify(
                    "minimals", result.minimals, S=S, budget=self.budget
                )
                expected = max(
                    1,
                    oracle.brute_min_cover(
                        set(result.target), [set(p) for p in result.minimal_p_sets]
                    ),
                )
                if expected != len(result.components):
                    report.missing.append(f"components={expected}")
                    report.unexpected.append(f"components={len(result.components)}")

            return DecompositionResponse(
                semigroup=SemigroupModel.from_semigroup(S),
                target=sorted(result.target),
                minimals=[list(T.coords) for T in result.minimals],
                minimal_p_sets=[sorted(p) for p in result.minimal_p_sets],
                components=[list(T.coords) for T in result.components],
                p_sets=[sorted(p) for p in result.p_sets],
                verification=_verification(report) if report else None,
            )


# Create service instance
semigroup_service = SemigroupService()
