from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Tuple

import structlog

from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.reports import CheckReport, SweepReport
from app.domain.services.oracle_sweeps import large_energy_sweep, ratio_check, slope_check, small_energy_sweep

logger = structlog.get_logger()

_SMALL = "mathieu-minpi2"


@dataclass(frozen=True)
class RunOracleSweepRequest:
    """
    ``grid`` is a list of ν for the large-energy problems and of h for
    ``mathieu-minpi2``; ``keep`` is the first dropped power of ν⁻¹ in λ.
    """

    problem_id: str
    grid: Tuple[float, ...] = ()
    keep: int = 7
    h: float = 1.0
    alpha: float = 6.0
    q: float = 0.05
    nu: float = 0.5
    tol: float = 1e-12
    slack: Optional[float] = None


@dataclass(frozen=True)
class RunOracleSweepResult:
    sweep: SweepReport
    check: CheckReport


class RunOracleSweep:
    def execute(self, request: RunOracleSweepRequest) -> RunOracleSweepResult:
        if any(v <= 0 for v in request.grid):
            raise InvalidRunConfigError(f"grid values must be positive, got {list(request.grid)}")
        started = time.perf_counter()
        logger.info("oracle_sweep_started", problem=request.problem_id, grid=list(request.grid))

        if request.problem_id == _SMALL:
            sweep = small_energy_sweep(request.grid or (100.0, 400.0, 1600.0), nu=request.nu, tol=min(request.tol, 1e-13))
            check = ratio_check(sweep, slack=request.slack if request.slack is not None else 0.25)
        else:
            sweep = large_energy_sweep(
                request.problem_id,
                request.grid or (6.0, 8.0, 10.0, 12.0),
                keep=request.keep,
                h=request.h,
                alpha=request.alpha,
                q=request.q,
                tol=request.tol,
            )
            check = slope_check(sweep, slack=request.slack if request.slack is not None else 0.15)

        if not check.passed:
            logger.warning("check_failed", check=check.name, failures=list(check.failures))
        logger.info(
            "oracle_sweep_finished",
            problem=request.problem_id,
            slope=sweep.slope,
            predicted=sweep.predicted_slope,
            elapsed_s=round(time.perf_counter() - started, 3),
        )
        return RunOracleSweepResult(sweep=sweep, check=check)
