"""
Numeric Floquet oracle for ψ″ = (u(x) + λ)ψ.

The two canonical solutions are integrated across one period with DOP853
(complex state). The monodromy matrix has eigenvalues e^{±iνT}; ν is read
from the eigenvalue whose logarithm sits closest to the free branch √(−λ).
Complex-shifted potentials are integrated along x = offset + s, s ∈ [0, T].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import structlog
from scipy import integrate, linalg, optimize

from app.domain.exceptions import IntegrationError
from app.domain.model.elliptic import EllipticParams
from app.domain.model.problems import RingElem
from app.domain.model.reports import ErrorReport, MonodromyResult, WavefunctionErrorReport
from app.domain.model.series import TruncatedSeries
from app.domain.services.func_rings import ring_diff, ring_eval

logger = structlog.get_logger()

Potential = Callable[[complex], complex]

_MIN_TOL = 1e-13
_EDGE_TOL = 1e-6


def potential_callback(
    potential: RingElem,
    params: Mapping[str, complex],
    ell: Optional[EllipticParams] = None,
    offset: complex = 0j,
) -> Potential:
    """u(x + offset) evaluated from an exact ring element."""
    return lambda x: ring_eval(potential, x + offset, params, ell)


def _check_tol(tol: float) -> None:
    if tol < _MIN_TOL:
        raise IntegrationError(f"tolerance must be >= {_MIN_TOL}, got {tol}")


def _solve(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    span: Tuple[float, float],
    y0: Sequence[complex],
    tol: float,
    t_eval: Optional[Sequence[float]] = None,
):
    sol = integrate.solve_ivp(
        rhs,
        span,
        np.asarray(y0, dtype=complex),
        method="DOP853",
        rtol=tol,
        atol=tol,
        t_eval=t_eval,
    )
    if not sol.success:
        # step-size collapse: a pole on the path
        raise IntegrationError(f"integration stopped at s={sol.t[-1]:.6g}: {sol.message}")
    return sol


def _nearest_branch(rho: complex, target: complex, period: float) -> complex:
    base = -1j * cmath.log(rho) / period
    shift = round((target - base).real * period / (2 * math.pi))
    return base + 2 * math.pi * shift / period


# ---------------------------------------------------------------------------
# Monodromy
# ---------------------------------------------------------------------------


def monodromy(
    u_eval: Potential,
    lam: complex,
    period: float,
    tol: float = 1e-12,
    offset: complex = 0j,
) -> MonodromyResult:
    _check_tol(tol)

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        w = u_eval(offset + s) + lam
        return np.array([y[1], w * y[0], y[3], w * y[2]], dtype=complex)

    sol = _solve(rhs, (0.0, period), (1, 0, 0, 1), tol)
    p1, dp1, p2, dp2 = sol.y[:, -1]
    matrix = np.array([[p1, p2], [dp1, dp2]], dtype=complex)
    trace = complex(p1 + dp2)
    defect = abs(complex(linalg.det(matrix)) - 1)

    free_nu = cmath.sqrt(-lam)
    candidates = [_nearest_branch(complex(rho), free_nu, period) for rho in linalg.eigvals(matrix)]
    best = min(range(2), key=lambda i: abs(candidates[i] - free_nu))
    nu = candidates[best]
    partner = _nearest_branch(cmath.exp(1j * candidates[1 - best] * period), -free_nu, period)

    edge = min(abs(trace - 2), abs(trace + 2)) < _EDGE_TOL
    if edge:
        logger.warning("monodromy_near_band_edge", trace=str(trace), lam=str(lam), nu=str(nu))
    return MonodromyResult(
        matrix=((complex(p1), complex(p2)), (complex(dp1), complex(dp2))),
        trace=trace,
        nu=nu,
        nu_pair=(nu, partner),
        wronskian_defect=defect,
        period=period,
        steps=int(sol.t.size),
        tolerance=tol,
        near_band_edge=edge,
    )


def floquet_error(
    u_eval: Potential,
    lam: complex,
    nu_series: complex,
    period: float,
    omitted_term_bound: float,
    tol: float = 1e-12,
    offset: complex = 0j,
) -> ErrorReport:
    """Oracle ν at a series λ against the ν the series was evaluated at."""
    result = monodromy(u_eval, lam, period, tol, offset)
    nu_oracle = result.nu
    return ErrorReport(
        lambda_value=complex(lam),
        nu_series=complex(nu_series),
        nu_oracle=nu_oracle,
        abs_err=abs(nu_oracle - nu_series),
        omitted_term_bound=abs(omitted_term_bound),
        wronskian_defect=result.wronskian_defect,
    )


def standing_wave_eigenvalue(
    u_eval: Potential,
    bracket: Tuple[float, float],
    half_period: float,
    tol: float = 1e-12,
) -> float:
    """
    λ of the even standing wave: ψ(0) = 1, ψ′(0) = 0 shot to ψ′(half_period) = 0.

    Both ends must be symmetry points of u. Gives one reference value inside
    the bracket; band edges are not searched for.
    """
    _check_tol(tol)

    def mismatch(lam: float) -> float:
        def rhs(s: float, y: np.ndarray) -> np.ndarray:
            return np.array([y[1], (u_eval(s) + lam) * y[0]], dtype=complex)

        sol = _solve(rhs, (0.0, half_period), (1, 0), tol)
        end = sol.y[:, -1]
        # scale-free: the slope relative to the amplitude
        return float((end[1] / max(abs(end[0]), 1.0)).real)

    lo, hi = bracket
    f_lo, f_hi = mismatch(lo), mismatch(hi)
    if f_lo * f_hi > 0:
        raise IntegrationError(f"bracket {bracket} does not enclose a standing wave")
    return float(optimize.brentq(mismatch, lo, hi, xtol=tol * max(1.0, abs(lo), abs(hi)), maxiter=200))


# ---------------------------------------------------------------------------
# Wave functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumericExponent:
    """S, S′ and S″ of an asymptotic ψ = e^S as numeric callbacks."""

    value: Callable[[complex], complex]
    slope: Callable[[complex], complex]
    curvature: Callable[[complex], complex]


def _weighted_terms(
    series: TruncatedSeries, variable: complex
) -> List[Tuple[complex, RingElem]]:
    return [(variable**power, coeff) for power, coeff in series.items()]


def exponent_from_series(
    series: TruncatedSeries,
    variable: complex,
    params: Mapping[str, complex],
    ell: Optional[EllipticParams] = None,
    offset: complex = 0j,
) -> NumericExponent:
    """Numeric S(x) from an exponent series with exact ring coefficients, at x + offset."""
    terms = [
        (w, c, ring_diff(c), ring_diff(ring_diff(c))) for w, c in _weighted_terms(series, variable)
    ]

    def at(index: int) -> Callable[[complex], complex]:
        return lambda x: sum(t[0] * ring_eval(t[index], x + offset, params, ell) for t in terms)

    return NumericExponent(value=at(1), slope=at(2), curvature=at(3))


def exponent_from_densities(
    series: TruncatedSeries,
    variable: complex,
    params: Mapping[str, complex],
    ell: Optional[EllipticParams] = None,
    x0: float = 0.0,
) -> NumericExponent:
    """S′ = Σ v_ℓ g^(−ℓ) summed exactly; S(x) = ∫ S′ from x0 by quadrature along the real axis."""
    terms = [(w, c, ring_diff(c)) for w, c in _weighted_terms(series, variable)]

    def slope(x: complex) -> complex:
        return sum(t[0] * ring_eval(t[1], x, params, ell) for t in terms)

    def curvature(x: complex) -> complex:
        return sum(t[0] * ring_eval(t[2], x, params, ell) for t in terms)

    def value(x: complex) -> complex:
        end = complex(x).real
        re, _ = integrate.quad(lambda s: slope(s).real, x0, end, epsabs=1e-13, epsrel=1e-12, limit=200)
        im, _ = integrate.quad(lambda s: slope(s).imag, x0, end, epsabs=1e-13, epsrel=1e-12, limit=200)
        return complex(re, im)

    return NumericExponent(value=value, slope=slope, curvature=curvature)


def wavefunction_error(
    exponent: NumericExponent,
    lam: complex,
    u_eval: Potential,
    x_grid: Sequence[float],
    tol: float = 1e-12,
) -> WavefunctionErrorReport:
    """
    e^{S(x) − S(x₀)} against the ODE solution with ψ(x₀) = 1, ψ′(x₀) = S′(x₀),
    x₀ the first grid point; also |S″ + S′² − (u + λ)| on the grid.
    """
    _check_tol(tol)
    grid = [float(x) for x in x_grid]
    if not grid:
        return WavefunctionErrorReport((), (), ())
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise IntegrationError("x_grid must be strictly increasing")
    x0 = grid[0]

    residuals = tuple(
        abs(exponent.curvature(x) + exponent.slope(x) ** 2 - (u_eval(x) + lam)) for x in grid
    )
    if len(grid) == 1:
        return WavefunctionErrorReport(tuple(grid), (0.0,), residuals)

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        return np.array([y[1], (u_eval(s) + lam) * y[0]], dtype=complex)

    sol = _solve(rhs, (x0, grid[-1]), (1, exponent.slope(x0)), tol, t_eval=grid)
    s0 = exponent.value(x0)
    errors = []
    for x, psi in zip(grid, sol.y[0]):
        asym = cmath.exp(exponent.value(x) - s0)
        errors.append(abs(asym - psi) / abs(asym))
    return WavefunctionErrorReport(tuple(grid), tuple(errors), residuals)
