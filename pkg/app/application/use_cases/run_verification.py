"""Runs named verification suites and collects one CheckReport per case."""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import structlog

from app.domain.data.closed_forms import CLOSED_FORMS
from app.domain.exceptions import DomainException, InvalidRunConfigError
from app.domain.model.dispersion import VerificationReport
from app.domain.model.reports import CheckReport, LimitReport
from app.domain.services import elliptic_numerics as numerics
from app.domain.services import oracle_sweeps
from app.domain.services.closed_forms import verify_entry
from app.domain.services.correspondence import g_resummation_check, lambda_from_F_check, wavefunction_G_check
from app.domain.services.dispersion import large_energy_expansion, parity_check, sign_replay_check
from app.domain.services.golden_checks import golden_suite
from app.domain.services.lame_limit import lame_to_mathieu_limit
from app.domain.services.problem_catalog import get_problem
from app.domain.services.theta_matrix import digest_check, divisor_checks, e2_identity_check, product_form_check

logger = structlog.get_logger()

_LARGE = ("mathieu-large", "lame-large")


@dataclass(frozen=True)
class RunVerificationRequest:
    suites: Tuple[str, ...]
    order: int = 6
    h: float = 1.0
    alpha: float = 6.0
    q: float = 0.02
    nu: float = 10.0
    n_max: int = 200
    k_max: int = 4
    k_dim: int = 64
    oracle_tol: float = 1e-12
    function_tol: float = 1e-10
    composed_tol: float = 1e-9
    threads: int = 4


@dataclass(frozen=True)
class RunVerificationResult:
    reports: Tuple[CheckReport, ...]
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed(self) -> Tuple[CheckReport, ...]:
        return tuple(r for r in self.reports if not r.passed)


def from_verification(report: VerificationReport) -> CheckReport:
    failures = tuple(f"order {c.order}: {c.residual}" for c in report.checks if c.status != "match")
    return CheckReport(name=report.name, checked=len(report.checks), failures=failures, details=dict(report.details))


def from_limit(report: LimitReport) -> CheckReport:
    over = tuple(
        f"error {s.error:.3e} over budget {s.budget:.3e} at q={s.q:g}" for s in report.samples if not s.passed
    )
    return CheckReport(
        name=report.name,
        checked=len(report.samples),
        failures=tuple(report.failures) + over,
        details={"samples": [(s.q, s.error, s.budget) for s in report.samples]},
    )


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def _golden(request: RunVerificationRequest) -> List[CheckReport]:
    return golden_suite()


def _closed_forms(request: RunVerificationRequest) -> List[CheckReport]:
    reports = []
    for entry in CLOSED_FORMS:
        for sign in (1, -1):
            report = from_verification(verify_entry(entry, sign))
            label = f"{report.name}[{'+' if sign > 0 else '-'}]"
            reports.append(CheckReport(label, report.checked, report.failures, report.details))
    return reports


def _parity(request: RunVerificationRequest) -> List[CheckReport]:
    reports = []
    for problem_id in _LARGE:
        potential = get_problem(problem_id).potential
        _, plus = large_energy_expansion(potential, request.order, 1)
        _, minus = large_energy_expansion(potential, request.order, -1)
        report = parity_check(plus, minus)
        reports.append(CheckReport(f"parity-{problem_id}", report.checked, report.failures, report.details))
    return reports


def _sign_replay(request: RunVerificationRequest) -> List[CheckReport]:
    reports = []
    for problem_id in _LARGE:
        report = sign_replay_check(get_problem(problem_id).potential, request.order)
        reports.append(CheckReport(f"sign-replay-{problem_id}", report.checked, report.failures, report.details))
    return reports


def _jacobi_map(request: RunVerificationRequest) -> List[CheckReport]:
    ell = numerics.elliptic_params_from_q(request.q)
    samples = [0.3 * t for t in range(1, 5)]
    return [numerics.jacobi_map_check(ell, request.alpha, 0.3, samples, tol=request.composed_tol)]


def _oracle(request: RunVerificationRequest) -> List[CheckReport]:
    mathieu = oracle_sweeps.large_energy_sweep("mathieu-large", h=request.h, tol=request.oracle_tol)
    lame = oracle_sweeps.large_energy_sweep(
        "lame-large", keep=5, alpha=request.alpha, q=0.05, tol=request.oracle_tol
    )
    small = oracle_sweeps.small_energy_sweep()
    return [
        oracle_sweeps.slope_check(mathieu, max_error=(request.nu, 1e-6)),
        oracle_sweeps.slope_check(lame),
        oracle_sweeps.ratio_check(small),
    ]


def _limit(request: RunVerificationRequest) -> List[CheckReport]:
    samples = () if request.q == 0 else (request.q, request.q / 10, request.q / 100)
    return [from_limit(lame_to_mathieu_limit(check_order=request.order, q_samples=samples, h=request.h))]


def _divisors(request: RunVerificationRequest) -> List[CheckReport]:
    return [
        divisor_checks(request.n_max, request.k_max, request.k_dim),
        e2_identity_check(request.n_max, tol=request.function_tol),
    ]


def _appendix(request: RunVerificationRequest) -> List[CheckReport]:
    return [digest_check(), *_divisors(request), product_form_check(tol=request.function_tol)]


def _correspondence(request: RunVerificationRequest) -> List[CheckReport]:
    return [
        g_resummation_check(),
        wavefunction_G_check(nu=request.nu, alpha=request.alpha, q=request.q, tol=request.composed_tol),
        lambda_from_F_check(nu=request.nu, alpha=request.alpha, q=request.q),
    ]


Runner = Callable[[RunVerificationRequest], List[CheckReport]]

SUITES: Dict[str, Runner] = {
    "golden": _golden,
    "closed-forms": _closed_forms,
    "parity": _parity,
    "sign-replay": _sign_replay,
    "jacobi-map": _jacobi_map,
    "oracle": _oracle,
    "limit": _limit,
    "divisors": _divisors,
    "appendix": _appendix,
    "correspondence": _correspondence,
}


def _guarded(name: str, runner: Runner, request: RunVerificationRequest) -> List[CheckReport]:
    """Domain errors inside a suite fail that suite; configuration errors propagate."""
    try:
        return runner(request)
    except InvalidRunConfigError:
        raise
    except DomainException as exc:
        return [CheckReport(name=name, checked=0, failures=(f"{type(exc).__name__}: {exc}",))]


class RunVerification:
    def execute(self, request: RunVerificationRequest) -> RunVerificationResult:
        unknown = [s for s in request.suites if s not in SUITES]
        if unknown or not request.suites:
            raise InvalidRunConfigError(
                f"unknown suite(s) {', '.join(unknown) or '(none given)'}; choose from {', '.join(SUITES)}"
            )
        if not (request.nu > 0 and math.isfinite(request.nu)):
            raise InvalidRunConfigError(f"nu must be a positive number, got {request.nu}")
        started = time.perf_counter()
        logger.info("verification_started", suites=list(request.suites), threads=request.threads)

        with ThreadPoolExecutor(max_workers=max(1, request.threads)) as pool:
            futures = [pool.submit(_guarded, name, SUITES[name], request) for name in request.suites]
            reports = [report for future in futures for report in future.result()]

        for report in reports:
            if not report.passed:
                logger.warning("check_failed", check=report.name, failures=list(report.failures[:5]))
        elapsed = time.perf_counter() - started
        result = RunVerificationResult(reports=tuple(reports), elapsed_s=elapsed)
        logger.info(
            "verification_finished",
            checks=len(reports),
            failed=len(result.failed),
            elapsed_s=round(elapsed, 3),
        )
        return result
