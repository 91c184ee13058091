from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Tuple

import structlog

from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.reports import LimitReport
from app.domain.services.lame_limit import lame_to_mathieu_limit, qexpansion_check

logger = structlog.get_logger()


@dataclass(frozen=True)
class RunLimitChecksRequest:
    """An empty ``q_samples`` runs the exact q → 0 checks only."""

    check_order: int = 6
    q_samples: Tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    h: float = 1.0
    omega1: float = math.pi / 2


@dataclass(frozen=True)
class RunLimitChecksResult:
    reports: Tuple[LimitReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


class RunLimitChecks:
    def execute(self, request: RunLimitChecksRequest) -> RunLimitChecksResult:
        if request.check_order < 1:
            raise InvalidRunConfigError(f"check_order must be >= 1, got {request.check_order}")
        if any(not 0 < q < 1 for q in request.q_samples):
            raise InvalidRunConfigError(f"q samples must lie in (0, 1), got {list(request.q_samples)}")
        started = time.perf_counter()
        logger.info("limit_checks_started", check_order=request.check_order, q_samples=list(request.q_samples))

        reports = [lame_to_mathieu_limit(request.check_order, request.q_samples, request.h, request.omega1)]
        if request.q_samples:
            reports.append(qexpansion_check(request.q_samples, request.omega1))

        result = RunLimitChecksResult(reports=tuple(reports))
        logger.info(
            "limit_checks_finished",
            passed=result.passed,
            elapsed_s=round(time.perf_counter() - started, 3),
        )
        return result
