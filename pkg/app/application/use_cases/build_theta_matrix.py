from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import structlog

from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.theta_matrix import Theta4Matrix
from app.domain.services.theta_matrix import log_eta_series, log_theta4_matrix

logger = structlog.get_logger()


@dataclass(frozen=True)
class BuildThetaMatrixRequest:
    k: int = 0
    dim: int = 22
    max_dim: int = 64


@dataclass(frozen=True)
class BuildThetaMatrixResult:
    matrix: Theta4Matrix
    log_eta: Tuple[Fraction, ...]  # coefficients of (x₁x₂)ⁿ, n = 1..dim−1


class BuildThetaMatrix:
    def execute(self, request: BuildThetaMatrixRequest) -> BuildThetaMatrixResult:
        if not 1 <= request.dim <= request.max_dim:
            raise InvalidRunConfigError(f"dim must be in 1..{request.max_dim}, got {request.dim}")
        if request.k < 0:
            raise InvalidRunConfigError(f"k must be >= 0, got {request.k}")
        started = time.perf_counter()
        logger.info("theta_matrix_started", k=request.k, dim=request.dim)
        matrix = log_theta4_matrix(request.k, request.dim)
        log_eta = tuple(log_eta_series(request.dim - 1))
        logger.info(
            "theta_matrix_finished",
            k=request.k,
            dim=request.dim,
            nonzero=sum(1 for _ in matrix.nonzero()),
            elapsed_s=round(time.perf_counter() - started, 3),
        )
        return BuildThetaMatrixResult(matrix=matrix, log_eta=log_eta)
