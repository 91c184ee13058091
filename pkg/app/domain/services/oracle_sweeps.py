"""
Series against oracle on a grid, with the fitted error law.

Large energy: λ_series(ν) is fed to the monodromy oracle and the returned ν
is compared with the ν the series was evaluated at; the error should fall as
ν^(−(p+1)) with p the first omitted power of ν⁻¹ in λ. Small energy: the
Mathieu dispersion around x* = π/2 against the standing-wave eigenvalue, the
error falling as h^(−p/2) past the last kept power p − 1 of h^(−1/2).
"""

from __future__ import annotations

import math
from statistics import median
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from app.domain.data.small_dispersion import mathieu_minpi2_dispersion
from app.domain.exceptions import InvalidRunConfigError, TruncationError
from app.domain.model.elliptic import EllipticParams
from app.domain.model.reports import CheckReport, SweepPoint, SweepReport
from app.domain.model.series import TruncatedSeries
from app.domain.services import elliptic_numerics as numerics
from app.domain.services.dispersion import large_energy_expansion
from app.domain.services.hill_oracle import floquet_error, potential_callback, standing_wave_eigenvalue
from app.domain.services.problem_catalog import get_problem

_LARGE_PROBLEMS = ("mathieu-large", "lame-large")
_STANDING_WAVE_WINDOW = 0.5


def _series_value(series: TruncatedSeries, variable: complex, bindings: Mapping[str, complex]) -> complex:
    return sum(complex(c.evaluate(bindings)) * variable**p for p, c in series.items() if not c.is_zero())


def kept_dispersion(problem_id: str, keep: int) -> Tuple[TruncatedSeries, int, TruncatedSeries]:
    """λ below ν^(−keep), the first omitted nonzero power p and the series through p."""
    if problem_id not in _LARGE_PROBLEMS:
        raise InvalidRunConfigError(f"oracle sweeps run on {', '.join(_LARGE_PROBLEMS)}, got {problem_id!r}")
    if keep < 1:
        raise InvalidRunConfigError("keep must be >= 1")
    dispersion, _ = large_energy_expansion(get_problem(problem_id).potential, keep + 3)
    series = dispersion.series
    for power in range(keep, series.order):
        if not series.coefficient(power).is_zero():
            return series.truncated(keep), power, series.truncated(power + 1)
    raise TruncationError(f"no nonzero coefficient of {series.symbol} in {keep}..{series.order - 1}")


def _fit_slope(variables: Sequence[float], errors: Sequence[float]) -> float:
    if len(variables) < 2 or min(errors) <= 0:
        return float("nan")
    coeffs = np.polyfit(np.log(np.asarray(variables)), np.log(np.asarray(errors)), 1)
    return float(-coeffs[0])


def _constant(points: Sequence[SweepPoint]) -> float:
    ratios = [p.abs_err / p.omitted_term_bound for p in points if p.omitted_term_bound > 0]
    return float(median(ratios)) if ratios else float("nan")


def large_energy_sweep(
    problem_id: str,
    nus: Sequence[float] = (6.0, 8.0, 10.0, 12.0),
    keep: int = 7,
    h: float = 1.0,
    alpha: float = 6.0,
    q: float = 0.05,
    tol: float = 1e-12,
) -> SweepReport:
    """
    |ν_oracle(λ_series(ν)) − ν| over ``nus``.

    Lamé runs at ω₁ = π/2 along the line x + ω₂, where α℘̃ is regular.
    """
    kept, omitted, through = kept_dispersion(problem_id, keep)
    ell: Optional[EllipticParams] = None
    offset = 0j
    if problem_id == "lame-large":
        ell = numerics.elliptic_params_from_q(q)
        offset = ell.omega2
        params: Dict[str, complex] = {"alpha": alpha}
    else:
        params = {"h": h}
    bindings = dict(ell.bindings()) if ell is not None else {}
    bindings.update(params)
    u_eval = potential_callback(get_problem(problem_id).potential.potential, params, ell)
    omitted_coeff = complex(through.coefficient(omitted).evaluate(bindings))

    points = []
    for nu in nus:
        lam = _series_value(kept, 1 / nu, bindings)
        bound = abs(omitted_coeff) * nu ** (-omitted) / (2 * nu)
        report = floquet_error(u_eval, lam, nu, math.pi, bound, tol=tol, offset=offset)
        points.append(SweepPoint(nu, complex(nu), report.nu_oracle, report.abs_err, report.omitted_term_bound))
    return SweepReport(
        name=f"oracle-{problem_id}",
        points=tuple(points),
        slope=_fit_slope(nus, [p.abs_err for p in points]),
        predicted_slope=float(omitted + 1),
        constant=_constant(points),
    )


def small_energy_sweep(
    hs: Sequence[float] = (100.0, 400.0, 1600.0),
    nu: float = 0.5,
    tol: float = 1e-13,
) -> SweepReport:
    """λ = 2h + δ(h) around x* = π/2 against the even standing wave on [0, π/2]."""
    dispersion = mathieu_minpi2_dispersion()
    series = dispersion.series
    omitted = series.order
    last = series.coefficient(series.order - 1)
    u = get_problem("mathieu-minpi2").potential.potential
    points = []
    for h in hs:
        bindings = {"h": h, "nu": nu}
        lam_series = (2 * h + _series_value(series, h**-0.5, bindings)).real
        u_eval = potential_callback(u, {"h": h})
        bracket = (lam_series - _STANDING_WAVE_WINDOW, lam_series + _STANDING_WAVE_WINDOW)
        lam_oracle = standing_wave_eigenvalue(u_eval, bracket, math.pi / 2, tol=tol)
        bound = abs(complex(last.evaluate(bindings))) * h ** (-omitted / 2)
        points.append(SweepPoint(h, complex(lam_series), complex(lam_oracle), abs(lam_series - lam_oracle), bound))
    return SweepReport(
        name="oracle-mathieu-minpi2",
        points=tuple(points),
        slope=_fit_slope(hs, [p.abs_err for p in points]),
        predicted_slope=omitted / 2,
        constant=_constant(points),
    )


def slope_check(report: SweepReport, slack: float = 0.15, max_error: Optional[Tuple[float, float]] = None) -> CheckReport:
    """Fitted slope within ``slack`` of the prediction; optionally abs_err < bound at one grid value."""
    failures: List[str] = []
    if not abs(report.slope - report.predicted_slope) <= slack * report.predicted_slope:
        failures.append(f"slope {report.slope:.3f}, predicted {report.predicted_slope:.3f}")
    if max_error is not None:
        at, bound = max_error
        for p in report.points:
            if p.variable == at and p.abs_err >= bound:
                failures.append(f"abs error {p.abs_err:.3e} at {at:g} is not below {bound:.1e}")
    return CheckReport(
        name=report.name,
        checked=len(report.points),
        failures=tuple(failures),
        details={"slope": report.slope, "predicted_slope": report.predicted_slope, "constant": report.constant},
        budget=slack,
    )


def ratio_check(report: SweepReport, slack: float = 0.25) -> CheckReport:
    """Consecutive error ratios against (v₂/v₁)^predicted_slope."""
    failures: List[str] = []
    ratios = []
    for a, b in zip(report.points, report.points[1:]):
        expected = (b.variable / a.variable) ** report.predicted_slope
        ratio = a.abs_err / b.abs_err if b.abs_err > 0 else float("inf")
        ratios.append(ratio)
        if not abs(ratio - expected) <= slack * expected:
            failures.append(f"{a.variable:g} -> {b.variable:g}: ratio {ratio:.3f}, expected {expected:.3f}")
    return CheckReport(
        name=report.name,
        checked=len(ratios),
        failures=tuple(failures),
        details={"ratios": ratios, "predicted_slope": report.predicted_slope},
        budget=slack,
    )
