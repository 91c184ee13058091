from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Tuple

import structlog

from app.domain.data.small_dispersion import SMALL_DISPERSIONS
from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.dispersion import DispersionSeries
from app.domain.model.problems import RingElem
from app.domain.model.series import TruncatedSeries
from app.domain.services.dispersion import large_energy_expansion, sqrt_lambda_series, substitute_small_dispersion
from app.domain.services.problem_catalog import flipped_branch, get_problem
from app.domain.services.riccati import density_table, large_energy_densities, small_energy_densities

logger = structlog.get_logger()


@dataclass(frozen=True)
class DeriveExpansionRequest:
    problem_id: str
    order: int
    sign: int = 1
    max_order: int = 12


@dataclass(frozen=True)
class DeriveExpansionResult:
    """
    Large energy: λ(ν), √λ(ν) and the exponent in ν⁻¹, plus v₁..v_N.
    Small energy: the printed-form densities v₋₁..v_N and ∂ ln ψ with the
    literature dispersion substituted.
    """

    problem_id: str
    regime: str
    order: int
    sign: int
    densities: Tuple[RingElem, ...]
    dispersion: Optional[DispersionSeries] = None
    sqrt_lambda: Optional[TruncatedSeries] = None
    exponent: Optional[TruncatedSeries] = None
    log_derivative: Optional[TruncatedSeries] = None


class DeriveExpansion:
    def execute(self, request: DeriveExpansionRequest) -> DeriveExpansionResult:
        if not 1 <= request.order <= request.max_order:
            raise InvalidRunConfigError(f"order must be in 1..{request.max_order}, got {request.order}")
        if request.sign not in (1, -1):
            raise InvalidRunConfigError(f"sign must be +1 or -1, got {request.sign}")
        problem = get_problem(request.problem_id)
        started = time.perf_counter()
        logger.info("derive_started", problem=problem.problem_id, order=request.order, sign=request.sign)

        if problem.regime == "large":
            densities = large_energy_densities(problem.potential, request.order, request.sign)
            dispersion, exponent = large_energy_expansion(problem.potential, request.order, request.sign)
            result = DeriveExpansionResult(
                problem_id=problem.problem_id,
                regime="large",
                order=request.order,
                sign=request.sign,
                densities=tuple(densities),
                dispersion=dispersion,
                sqrt_lambda=sqrt_lambda_series(dispersion),
                exponent=exponent.series,
            )
        else:
            small = problem.small
            if request.sign < 0:
                small = flipped_branch(small)
            dispersion = SMALL_DISPERSIONS[problem.problem_id]()
            result = DeriveExpansionResult(
                problem_id=problem.problem_id,
                regime="small",
                order=request.order,
                sign=request.sign,
                densities=tuple(density_table(small, request.order)),
                dispersion=dispersion,
                log_derivative=substitute_small_dispersion(
                    small_energy_densities(small, request.order), dispersion, small.symbol
                ),
            )

        logger.info(
            "derive_finished",
            problem=problem.problem_id,
            order=request.order,
            elapsed_s=round(time.perf_counter() - started, 3),
        )
        return result
