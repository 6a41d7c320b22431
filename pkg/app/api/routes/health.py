import time
from datetime import datetime

import structlog
from fastapi import APIRouter

from app.api.utils.config import config as settings
from app.api.utils.logger import LoggerMixin
from app.semigroups.core import apery_set, from_generators
from app.semigroups.gapsets import special_gaps

router = APIRouter()
logger = structlog.get_logger()

SERVICE_NAME = "msemigroups-api"
VERSION = "1.0.0"


def _self_check() -> dict:
    """Compute a small known example: <5,7,9> has Apéry set {0,7,9,16,18}"""
    S = from_generators([5, 7, 9])
    ok = list(apery_set(S)) == [0, 7, 9, 16, 18]
    ok = ok and list(special_gaps(S)) == [11, 13]
    return {"status": "healthy" if ok else "unhealthy", "example": str(S)}


class HealthRouter(LoggerMixin):
    """Health check router"""

    @router.get("/")
    async def health_check():
        """Basic health check endpoint"""
        return {
            "status": "healthy",
            "service": SERVICE_NAME,
            "timestamp": datetime.now().isoformat(),
            "version": VERSION,
        }

    @router.get("/detailed")
    async def detailed_health_check():
        """Detailed health check with the library self-check"""
        start_time = time.time()

        try:
            library_health = _self_check()
            response_time = time.time() - start_time

            return {
                "status": library_health["status"],
                "service": SERVICE_NAME,
                "timestamp": datetime.now().isoformat(),
                "version": VERSION,
                "response_time": round(response_time, 4),
                "components": {"library": library_health},
                "config": settings.get_environment_specific_config(),
            }

        except Exception as e:
            logger.error("Health check failed", error=str(e))
            return {
                "status": "unhealthy",
                "service": SERVICE_NAME,
                "timestamp": datetime.now().isoformat(),
                "version": VERSION,
                "error": str(e),
            }

    @router.get("/ready")
    async def readiness_check():
        """Readiness check for Kubernetes"""
        try:
            if _self_check()["status"] == "healthy":
                return {"status": "ready", "timestamp": datetime.now().isoformat()}
            return {
                "status": "not_ready",
                "reason": "Library self-check returned a wrong answer",
                "timestamp": datetime.now().isoformat(),
            }

        except Exception as e:
            logger.error("Readiness check failed", error=str(e))
            return {
                "status": "not_ready",
                "reason": str(e),
                "timestamp": datetime.now().isoformat(),
            }

    @router.get("/live")
    async def liveness_check():
        """Liveness check for Kubernetes"""
        return {"status": "alive", "timestamp": datetime.now().isoformat()}


# Create router instance
health_router = HealthRouter()
