"""
Lamé → Mathieu limit at small lattice nome.

With c = π/(2ω₁), Q = q^(1/2) and χ = cx, the shifted functions on the line
through ω₂ are Lambert series in Q:

    ℘̃(x + ω₂)/c² = −8 Σ_m m Q^m/(1 − Q^(2m)) cos 2mχ
    ζ̃(x + ω₂)/c  = −i + 4 Σ_m Q^m/(1 − Q^(2m)) sin 2mχ

and ζ₁, g₂, g₃ follow from E₂, E₄, E₆. Holding α = −h/(4Q) turns the Lamé
potential α℘̃(x + ω₂) into 2hc²cos 2χ as Q → 0, the Mathieu potential in χ.
The exact checks substitute these series into the Lamé coefficients (c = 1)
and require the negative powers of Q to cancel; the numeric checks evaluate
both sides over a few decades of q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy import divisor_sigma

from app.domain.exceptions import TruncationError
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.reports import LimitReport, LimitSample
from app.domain.model.scalars import I, ONE, ParamPoly
from app.domain.model.series import TruncatedSeries
from app.domain.model.weierstrass import WeierstrassElem
from app.domain.services import elliptic_numerics as numerics
from app.domain.services.dispersion import large_energy_expansion
from app.domain.services.func_rings import ring_eval
from app.domain.services.problem_catalog import lame_potential, mathieu_potential
from app.domain.services.series_ops import series_mul, series_pow

logger = structlog.get_logger()

HALF_NOME = "q^1/2"

_ALPHA_LIMIT = ParamPoly.const(Fraction(-1, 4)) * ParamPoly.symbol("h")
_SCALING_SLACK = 0.25
_DECAY_POWER = 0.4
_DEFAULT_Q = (1e-2, 1e-3, 1e-4)
_NOISE_FLOOR = 1e-10


# ---------------------------------------------------------------------------
# Exact q-series
# ---------------------------------------------------------------------------


def _lambert_series(order: int, piece) -> TruncatedSeries:
    """Σ_m Σ_j piece(m)·Q^(m(2j+1)) below Q^order."""
    terms: Dict[int, FourierTrigPoly] = {}
    for m in range(1, order):
        for p in range(m, order, 2 * m):
            terms[p] = terms[p] + piece(m) if p in terms else piece(m)
    if not terms:
        return TruncatedSeries.from_terms(HALF_NOME, {0: FourierTrigPoly()}, max(order, 1), lead=0)
    return TruncatedSeries.from_terms(HALF_NOME, terms, order, lead=0)


def shifted_wp_qseries(order: int, derivative: int = 0) -> TruncatedSeries:
    """∂ᵏ℘̃(x + ω₂)/c^(k+2) in powers of Q, coefficients trigonometric in χ."""
    if derivative < 0:
        raise ValueError("derivative order must be >= 0")

    def piece(m: int) -> FourierTrigPoly:
        f = FourierTrigPoly.cos(2 * m, -8 * m)
        for _ in range(derivative):
            f = f.diff()
        return f

    return _lambert_series(order, piece)


def shifted_zeta_qseries(order: int, with_constant: bool = True) -> TruncatedSeries:
    """ζ̃(x + ω₂)/c in powers of Q; the constant is −i."""
    series = _lambert_series(order, lambda m: FourierTrigPoly.sin(2 * m, 4))
    if not with_constant:
        return series
    head = TruncatedSeries.monomial(HALF_NOME, 0, FourierTrigPoly.constant(-I), series.order)
    return series + head


def _eisenstein_qseries(order: int, weight: int, factor: int) -> TruncatedSeries:
    """E_weight = 1 + factor·Σ σ_(weight−1)(n) qⁿ, written in Q (q = Q²)."""
    terms: Dict[int, ParamPoly] = {0: ONE}
    for n in range(1, (order - 1) // 2 + 1):
        terms[2 * n] = ParamPoly.const(factor * int(divisor_sigma(n, weight - 1)))
    return TruncatedSeries.from_terms(HALF_NOME, terms, max(order, 1), lead=0)


def lattice_qseries(order: int) -> Dict[str, TruncatedSeries]:
    """ζ₁ = E₂/3, g₂ = 4E₄/3, g₃ = 8E₆/27 at c = 1, below Q^order."""
    return {
        "zeta1": _eisenstein_qseries(order, 2, -24).scale(ParamPoly.const(Fraction(1, 3))),
        "g2": _eisenstein_qseries(order, 4, 240).scale(ParamPoly.const(Fraction(4, 3))),
        "g3": _eisenstein_qseries(order, 6, -504).scale(ParamPoly.const(Fraction(8, 27))),
    }


def _empty(order: int) -> TruncatedSeries:
    return TruncatedSeries(HALF_NOME, order, (), order)


def _alpha_degree(poly: ParamPoly) -> int:
    return max(poly.split("alpha"), default=0)


def limit_scalar(poly: ParamPoly, order: int) -> TruncatedSeries:
    """
    A Lamé coefficient in α, ζ₁, g₂, g₃ as a series in Q at α = −h/(4Q), c = 1.

    Exponents below ``order`` are exact; the series starts at Q^(−deg_α).
    """
    if order < 1:
        raise TruncationError("limit order must be >= 1")
    top = _alpha_degree(poly)
    width = order + top
    lattice = lattice_qseries(width)
    powers: Dict[Tuple[str, int], TruncatedSeries] = {}

    def power(name: str, n: int) -> TruncatedSeries:
        if (name, n) not in powers:
            powers[(name, n)] = series_pow(lattice[name], n)
        return powers[(name, n)]

    total = _empty(order)
    for a, rest in poly.split("alpha").items():
        if a < 0:
            raise TruncationError("negative power of alpha")
        for pz, r1 in rest.split("zeta1").items():
            for p2, r2 in r1.split("g2").items():
                for p3, coeff in r2.split("g3").items():
                    if coeff.is_zero():
                        continue
                    product = series_mul(series_mul(power("zeta1", pz), power("g2", p2)), power("g3", p3))
                    piece = product.scale(coeff * _ALPHA_LIMIT**a).shifted(-a)
                    total = total + piece
    return total.truncated(order)


def limit_function(elem: WeierstrassElem, order: int) -> TruncatedSeries:
    """
    elem(x + ω₂) at α = −h/(4Q), c = 1, as a series in Q with coefficients in χ = x.

    A secular part contributes its x-term only; the constant ω₂·secular is dropped.
    """
    if order < 1:
        raise TruncationError("limit order must be >= 1")
    top = max(
        [_alpha_degree(elem.const), _alpha_degree(elem.secular), _alpha_degree(elem.zeta)]
        + [_alpha_degree(d) for d in elem.derivs]
    )
    width = order + top
    basis: List[Tuple[ParamPoly, TruncatedSeries]] = [
        (elem.const, TruncatedSeries.monomial(HALF_NOME, 0, FourierTrigPoly.constant(1), width)),
        (elem.secular, TruncatedSeries.monomial(HALF_NOME, 0, FourierTrigPoly.linear(1), width)),
        (elem.zeta, shifted_zeta_qseries(width)),
    ]
    basis += [(d, shifted_wp_qseries(width, k)) for k, d in enumerate(elem.derivs)]

    total = _empty(order)
    for coeff, fn in basis:
        if coeff.is_zero():
            continue
        total = total + series_mul(limit_scalar(coeff, order), fn)
    return total.truncated(order)


def _non_constant(f) -> FourierTrigPoly:
    if isinstance(f, ParamPoly):
        return FourierTrigPoly()
    return f - FourierTrigPoly.constant(f.mean())


# ---------------------------------------------------------------------------
# Exact limit checks
# ---------------------------------------------------------------------------


def potential_limit_failures() -> List[str]:
    lame = limit_function(lame_potential().potential, 1)
    failures = [f"potential: Q^{p} term {c} survives" for p, c in lame.items() if p < 0 and not c.is_zero()]
    if not lame.coefficient(0) == mathieu_potential().potential:
        failures.append(f"potential: limit {lame.coefficient(0)} is not the Mathieu potential")
    return failures


def lambda_limit_failures(lame: TruncatedSeries, mathieu: TruncatedSeries) -> List[str]:
    """Each ν⁻ˡ coefficient of the Lamé λ tends to the Mathieu one (c = 1)."""
    failures: List[str] = []
    top = min(lame.order, mathieu.order)
    for power, coeff in lame.items():
        if power >= top:
            break
        limit = limit_scalar(coeff, 1)
        for p, c in limit.items():
            if p < 0 and not c.is_zero():
                failures.append(f"lambda nu^{-power}: Q^{p} term {c} survives")
        if not (limit.coefficient(0) - mathieu.coefficient(power)).is_zero():
            failures.append(
                f"lambda nu^{-power}: limit {limit.coefficient(0)} != {mathieu.coefficient(power)}"
            )
    return failures


def exponent_limit_failures(lame: TruncatedSeries, mathieu: TruncatedSeries) -> List[str]:
    """Same for the wave-function exponent, up to additive constants."""
    failures: List[str] = []
    top = min(lame.order, mathieu.order)
    for power, coeff in lame.items():
        if power >= top:
            break
        limit = limit_function(coeff, 1)
        for p, c in limit.items():
            if p < 0 and not _non_constant(c).is_zero():
                failures.append(f"exponent nu^{-power}: Q^{p} term {c} survives")
        diff = _non_constant(limit.coefficient(0)) - _non_constant(mathieu.coefficient(power))
        if not diff.is_zero():
            failures.append(f"exponent nu^{-power}: limit differs from Mathieu by {diff}")
    return failures


# ---------------------------------------------------------------------------
# Numeric checks
# ---------------------------------------------------------------------------


def _chi_samples(count: int = 7) -> np.ndarray:
    return np.linspace(0.2, 2.8, count)


def _scaling_failures(name: str, samples: Sequence[LimitSample], power: float, floor: float) -> List[str]:
    """error/q^power must settle as q decreases; pairs under the noise floor are skipped."""
    failures = []
    ordered = sorted(samples, key=lambda s: -s.q)
    for big, small in zip(ordered, ordered[1:]):
        if small.error <= floor:
            continue
        a, b = big.error / big.q**power, small.error / small.q**power
        if abs(a / b - 1) > _SCALING_SLACK:
            failures.append(f"{name}: error/q^{power:g} moved from {a:.4g} to {b:.4g}")
    return failures


def _decrease_failures(name: str, samples: Sequence[LimitSample], floor: float) -> List[str]:
    failures = []
    ordered = sorted(samples, key=lambda s: -s.q)
    for big, small in zip(ordered, ordered[1:]):
        if small.error > floor and small.error >= big.error:
            failures.append(f"{name}: error {small.error:.3e} at q={small.q:g} did not shrink")
    return failures


def _series_value(series: TruncatedSeries, nome: complex, chi: float) -> complex:
    return sum(nome**p * ring_eval(c, chi, {}) for p, c in series.items())


def qexpansion_check(
    q_samples: Sequence[float] = _DEFAULT_Q,
    omega1: float = math.pi / 2,
    tol: float = 1e-9,
    printed_wp: Optional[TruncatedSeries] = None,
    printed_zeta: Optional[TruncatedSeries] = None,
) -> LimitReport:
    """
    Truncated ℘̃/ζ̃ expansions (through Q³) against the theta-function values.

    Errors are in units of c² and c; ζ̃ is compared up to a constant. The
    remainder starts at Q⁴ = q², so error/q² must settle as q decreases.
    """
    wp_series = printed_wp if printed_wp is not None else shifted_wp_qseries(4)
    zeta_series = printed_zeta if printed_zeta is not None else shifted_zeta_qseries(4, with_constant=False)
    chis = _chi_samples()
    samples: List[LimitSample] = []
    for q in q_samples:
        ell = numerics.elliptic_params_from_q(q, omega1)
        c = ell.scale
        wp_err = 0.0
        zeta_num, zeta_ser = [], []
        for chi in chis:
            x = chi / c + ell.omega2
            wp_num = numerics.wp_tilde_derivative(0, x, ell) / c**2
            wp_err = max(wp_err, abs(wp_num - _series_value(wp_series, ell.nome, chi)))
            zeta_num.append(numerics.zeta_tilde(x, ell) / c)
            zeta_ser.append(_series_value(zeta_series, ell.nome, chi))
        zeta_err = max(
            abs((zn - zeta_num[0]) - (zs - zeta_ser[0])) for zn, zs in zip(zeta_num, zeta_ser)
        )
        error = max(wp_err, zeta_err)
        samples.append(LimitSample(q=q, error=error, budget=64 * q * q + tol))
    failures = _scaling_failures("qexpansion", samples, 2.0, _NOISE_FLOOR)
    return LimitReport(name="shifted-qexpansion", samples=tuple(samples), failures=tuple(failures))


def decay_budgets(
    q_samples: Sequence[float],
    errors: Sequence[float],
    power: float = _DECAY_POWER,
    floor: float = 1e-12,
) -> List[float]:
    """
    Budgets shrinking like q^power from the error at the largest q.

    Only the decay is budgeted; the size of the errors depends on h and the order.
    """
    if len(q_samples) != len(errors):
        raise TruncationError("one error per q sample is needed")
    if not errors:
        return []
    anchor = max(range(len(q_samples)), key=lambda i: q_samples[i])
    q0, e0 = q_samples[anchor], errors[anchor]
    return [max(e0 * (q / q0) ** power, floor) for q in q_samples]


def _decay_samples(q_samples: Sequence[float], errors: Sequence[float]) -> List[LimitSample]:
    budgets = decay_budgets(q_samples, errors)
    return [LimitSample(q=q, error=e, budget=b) for q, e, b in zip(q_samples, errors, budgets)]


def lambda_limit_numeric(
    lame: TruncatedSeries,
    mathieu: TruncatedSeries,
    q_samples: Sequence[float] = _DEFAULT_Q,
    h: float = 1.0,
    omega1: float = math.pi / 2,
) -> LimitReport:
    """
    Lamé λ coefficients at α = −h/(4Q) against c^(2+l) times the Mathieu ones.

    The sample error is the worst relative difference over the common powers.
    """
    top = min(lame.order, mathieu.order)
    worst: List[float] = []
    per_power: Dict[float, Dict[int, float]] = {}
    for q in q_samples:
        ell = numerics.elliptic_params_from_q(q, omega1)
        c = ell.scale
        bindings = dict(ell.bindings(), alpha=-h / (4 * ell.nome))
        errors: Dict[int, float] = {}
        for power, coeff in lame.items():
            if power >= top:
                break
            target = mathieu.coefficient(power).evaluate({"h": h}) * c ** (2 + power)
            value = coeff.evaluate(bindings)
            errors[power] = abs(value - target) / max(abs(target), 1.0)
        per_power[q] = errors
        worst.append(max(errors.values(), default=0.0))
    samples = _decay_samples(q_samples, worst)
    failures = _decrease_failures("lambda-limit", samples, 1e-12)
    return LimitReport(
        name="lambda-limit",
        samples=tuple(samples),
        failures=tuple(failures),
        details={"per_power": per_power},
    )


def exponent_limit_numeric(
    lame: TruncatedSeries,
    mathieu: TruncatedSeries,
    q_samples: Sequence[float] = _DEFAULT_Q,
    h: float = 1.0,
    omega1: float = math.pi / 2,
) -> LimitReport:
    """Lamé exponent coefficients at x + ω₂ against c^l times the Mathieu ones at χ = cx, up to constants."""
    top = min(lame.order, mathieu.order)
    chis = _chi_samples()
    errors: List[float] = []
    for q in q_samples:
        ell = numerics.elliptic_params_from_q(q, omega1)
        c = ell.scale
        params = {"alpha": -h / (4 * ell.nome)}
        worst = 0.0
        for power, coeff in lame.items():
            if power >= top:
                break
            target = mathieu.coefficient(power)
            lame_vals = [ring_eval(coeff, chi / c + ell.omega2, params, ell) for chi in chis]
            mathieu_vals = [ring_eval(target, chi, {"h": h}) * c**power for chi in chis]
            d_lame = [v - lame_vals[0] for v in lame_vals]
            d_mathieu = [v - mathieu_vals[0] for v in mathieu_vals]
            scale = max(max(abs(v) for v in d_mathieu), 1.0)
            worst = max(worst, max(abs(a - b) for a, b in zip(d_lame, d_mathieu)) / scale)
        errors.append(worst)
    samples = _decay_samples(q_samples, errors)
    failures = _decrease_failures("exponent-limit", samples, 1e-12)
    return LimitReport(name="exponent-limit", samples=tuple(samples), failures=tuple(failures))


# ---------------------------------------------------------------------------
# Aggregate
# ---------------------------------------------------------------------------


def lame_to_mathieu_limit(
    check_order: int = 6,
    q_samples: Sequence[float] = _DEFAULT_Q,
    h: float = 1.0,
    omega1: float = math.pi / 2,
) -> LimitReport:
    """
    Every limit check for λ and ψ through ν^(−check_order).

    Samples are those of the numeric λ comparison; failures collect all checks.
    """
    if check_order < 1:
        raise TruncationError("check_order must be >= 1")
    logger.info("lame_limit_started", check_order=check_order, q_samples=list(q_samples), h=h)
    lame_disp, lame_exponent = large_energy_expansion(lame_potential(), check_order + 1)
    mathieu_disp, mathieu_exponent = large_energy_expansion(mathieu_potential(), check_order + 1)
    lame_lambda, lame_exp = lame_disp.series, lame_exponent.series
    mathieu_lambda, mathieu_exp = mathieu_disp.series, mathieu_exponent.series

    failures: List[str] = []
    failures += potential_limit_failures()
    failures += lambda_limit_failures(lame_lambda, mathieu_lambda)
    failures += exponent_limit_failures(lame_exp, mathieu_exp)

    # an empty sample list leaves the exact checks only (the q = 0 limit itself)
    reports = []
    if q_samples:
        reports = [
            qexpansion_check(q_samples, omega1),
            lambda_limit_numeric(lame_lambda, mathieu_lambda, q_samples, h, omega1),
            exponent_limit_numeric(lame_exp, mathieu_exp, q_samples, h, omega1),
        ]
    for report in reports:
        failures += list(report.failures)
        failures += [
            f"{report.name}: error {s.error:.3e} over budget {s.budget:.3e} at q={s.q:g}"
            for s in report.samples
            if not s.passed
        ]
    result = LimitReport(
        name="lame-to-mathieu",
        samples=reports[1].samples if reports else (),
        failures=tuple(failures),
        details={r.name: [(s.q, s.error, s.budget) for s in r.samples] for r in reports},
    )
    if failures:
        logger.warning("check_failed", check="lame-to-mathieu", failures=len(failures))
    logger.info("lame_limit_finished", passed=result.passed)
    return result
