"""
Floquet dispersion and wave-function exponents.

Large energy: the period mean of each density v_ℓ is the secular coefficient
of its exact antiderivative. The Floquet condition over one period reads

    iν = √λ + Σ ⟨v_ℓ⟩ λ^(−ℓ/2),

which is reverted to √λ(ν) and squared to λ(ν). Re-expanding the exponent
sign·√λ·x + Σ ∫v_ℓ λ^(−ℓ/2) in ν⁻¹ must leave no secular term below ν⁰.

Small energy: the spectral parameter is replaced by its literature series in
g⁻¹ and the density series is regrouped.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from app.domain.exceptions import SecularResidueError, SeriesSymbolMismatchError, TruncationError
from app.domain.model.dispersion import DispersionSeries, ExponentSeries
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.problems import PotentialSpec, RingElem
from app.domain.model.reports import CheckReport
from app.domain.model.scalars import I, ONE, ZERO, ParamPoly
from app.domain.model.series import TruncatedSeries
from app.domain.model.weierstrass import WeierstrassElem
from app.domain.services.func_rings import ring_antiderivative, ring_diff, ring_equal, ring_reflect, secular_part
from app.domain.services.riccati import large_energy_densities
from app.domain.services.series_ops import (
    series_compose,
    series_inverse,
    series_mul,
    series_pow,
    series_revert,
    series_sqrt,
    series_substitute_scalar,
)

EPSILON = "lambda^-1/2"
NU_INV = "nu^-1"
_T = "t"

# t = 1/(iν) = −i·ν⁻¹
_T_TO_NU = -I


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def period_means(densities: Sequence[RingElem]) -> List[ParamPoly]:
    """⟨v_ℓ⟩ for ℓ = 1..N: the secular coefficient of each antiderivative."""
    return [secular_part(ring_antiderivative(v)) for v in densities]


def dispersion_from_periods(densities: Sequence[RingElem], sign: int = 1) -> DispersionSeries:
    """λ as a series in ν⁻¹ from the large-energy densities v₁..v_N of ψ with sign·√λ."""
    _check_sign(sign)
    means = period_means(densities)
    n = len(means)
    # iν = ε⁻¹ + sign·Σ m_ℓ ε^ℓ with ε = λ^(−1/2); for sign −1 the means belong to ψ₋
    terms: Dict[int, ParamPoly] = {-1: ONE}
    for ell, m in enumerate(means, start=1):
        terms[ell] = m * sign
    floquet = TruncatedSeries.from_terms(EPSILON, terms, order=n + 1, lead=-1)

    eps_of_t = series_revert(floquet, symbol=_T)
    sqrt_lambda = series_inverse(eps_of_t)
    lam = series_mul(sqrt_lambda, sqrt_lambda)
    return DispersionSeries(
        regime="large",
        series=series_substitute_scalar(lam, _T_TO_NU, NU_INV),
        provenance="derived",
    )


def sqrt_lambda_series(dispersion: DispersionSeries) -> TruncatedSeries:
    """√λ(ν) on the branch iν + …, continuous with the free case."""
    if dispersion.regime != "large":
        raise TruncationError("√λ(ν) is defined for the large-energy dispersion only")
    return series_sqrt(dispersion.series, I)


# ---------------------------------------------------------------------------
# Exponents
# ---------------------------------------------------------------------------


def _linear(sample: RingElem, coeff: ParamPoly) -> RingElem:
    if isinstance(sample, WeierstrassElem):
        return WeierstrassElem.linear(coeff)
    if isinstance(sample, FourierTrigPoly):
        return FourierTrigPoly.linear(coeff)
    raise TruncationError(f"no exponent ring for {type(sample).__name__}")


def large_energy_exponent(
    densities: Sequence[RingElem], sign: int = 1, ring_sample: Optional[RingElem] = None
) -> ExponentSeries:
    """sign·x·ε⁻¹ + Σ ∫v_ℓ ε^ℓ, each antiderivative checked against its density."""
    _check_sign(sign)
    sample = ring_sample if ring_sample is not None else (densities[0] if densities else FourierTrigPoly())
    terms: Dict[int, RingElem] = {-1: _linear(sample, ONE * sign)}
    for ell, v in enumerate(densities, start=1):
        integral = ring_antiderivative(v)
        if not ring_diff(integral) == v:
            raise SecularResidueError(f"antiderivative of v_{ell} does not differentiate back")
        terms[ell] = integral
    series = TruncatedSeries.from_terms(EPSILON, terms, order=len(densities) + 1, lead=-1)
    return ExponentSeries(series=series, sign=sign)


def refloquet_wavefunction(exponent: ExponentSeries, sqrt_lambda: TruncatedSeries) -> ExponentSeries:
    """Re-expand the exponent in ν⁻¹; every ν^(−l), l ≥ 1, must be periodic."""
    if sqrt_lambda.symbol != NU_INV:
        raise SeriesSymbolMismatchError(f"√λ must be a series in {NU_INV}, got {sqrt_lambda.symbol}")
    eps_of_nu = series_inverse(sqrt_lambda)
    regrouped = series_compose(exponent.series, eps_of_nu)
    for power, coeff in regrouped.items():
        if power >= 1 and not secular_part(coeff).is_zero():
            raise SecularResidueError(f"secular term {secular_part(coeff)}*x at nu^-{power}")
    return ExponentSeries(series=regrouped, sign=exponent.sign)


def floquet_phase(exponent: ExponentSeries) -> ParamPoly:
    """Coefficient of x·ν (the ±iν of e^{±iνx}); read from the ν⁻¹ symbol at power −1."""
    return secular_part(exponent.series.coefficient(-1))


def large_energy_expansion(
    potential: PotentialSpec | RingElem, order: int, sign: int = 1
) -> Tuple[DispersionSeries, ExponentSeries]:
    """λ(ν) from v₁..v_order and the matching exponent regrouped in ν⁻¹."""
    densities = large_energy_densities(potential, order, sign)
    dispersion = dispersion_from_periods(densities, sign)
    exponent = large_energy_exponent(densities, sign)
    return dispersion, refloquet_wavefunction(exponent, sqrt_lambda_series(dispersion))


def parity_check(plus: ExponentSeries, minus: ExponentSeries) -> CheckReport:
    """ψ₊(−x) = ψ₋(x) up to a constant, order by order; so ψ₊ ± ψ₋ are even and odd."""
    failures: List[str] = []
    top = min(plus.series.order, minus.series.order)
    low = min(plus.series.lead, minus.series.lead)
    checked = 0
    for power in range(low, top):
        p, m = plus.series.coefficient(power), minus.series.coefficient(power)
        if p.is_zero() and m.is_zero():
            continue
        checked += 1
        if not ring_equal(ring_diff(ring_reflect(p)), ring_diff(m)):
            failures.append(f"{plus.series.symbol}^{power}: reflected {p} is not {m}")
    return CheckReport(name="parity", checked=checked, failures=tuple(failures))


def sign_replay_check(potential: PotentialSpec | RingElem, order: int) -> CheckReport:
    """The densities of ψ₋ give back the λ(ν) of ψ₊."""
    plus = dispersion_from_periods(large_energy_densities(potential, order, 1), 1)
    minus = dispersion_from_periods(large_energy_densities(potential, order, -1), -1)
    failures = () if plus.series.equals(minus.series) else (f"{plus.series} != {minus.series}",)
    return CheckReport(name="sign-replay", checked=plus.series.order - plus.series.lead, failures=failures)


# ---------------------------------------------------------------------------
# Small energy
# ---------------------------------------------------------------------------


def _unknown_tail_bound(n_top: int, spectral_lead: int) -> int:
    """First exponent the unknown densities v_ℓ, ℓ > n_top, can reach."""
    if spectral_lead >= 0:
        return n_top + 1
    if spectral_lead == -1:
        ell = n_top + 1
        return ell - (ell + 1) // 2
    raise TruncationError(f"spectral series with leading power {spectral_lead} is not supported")


def substitute_small_dispersion(
    densities: Sequence[RingElem],
    dispersion: DispersionSeries,
    symbol: str,
) -> TruncatedSeries:
    """
    Σ v_ℓ g^(−ℓ) for v₋₁..v_N with the spectral parameter replaced by its
    series; the result is ∂ ln ψ as a series in ``symbol`` = g⁻¹.

    v_ℓ is at most of degree (ℓ+1)/2 in the spectral parameter, which fixes
    how far the regrouped series is known.
    """
    if dispersion.regime != "small" or dispersion.spectral is None:
        raise TruncationError("substitution needs a small-energy dispersion series")
    spectral_series = dispersion.series
    if spectral_series.symbol != symbol:
        raise SeriesSymbolMismatchError(f"{spectral_series.symbol!r} vs {symbol!r}")
    name = dispersion.spectral
    lead = spectral_series.leading()[0]
    n_top = len(densities) - 2
    order = _unknown_tail_bound(n_top, lead)
    if order <= -1:
        raise TruncationError("too few densities for any regrouped order")

    powers: Dict[int, TruncatedSeries] = {}
    total: Optional[TruncatedSeries] = None
    for ell, v in enumerate(densities, start=-1):
        for degree, part in sorted(v.split(name).items()):
            if part.is_zero():
                continue
            if degree < 0:
                raise TruncationError(f"negative power of {name} in v_{ell}")
            if degree == 0:
                piece = TruncatedSeries.from_terms(symbol, {ell: part}, max(order, ell + 1), lead=ell)
            else:
                if degree not in powers:
                    powers[degree] = series_pow(spectral_series, degree)
                piece = powers[degree].map(lambda c, p=part: p * c).shifted(ell)
            total = piece if total is None else total + piece
    if total is None:
        return TruncatedSeries(symbol, order, (), order)
    return total.truncated(min(order, total.order))


def identity_dispersion(spectral: str, symbol: str, order: int = 20) -> DispersionSeries:
    """The map δ → δ as a degenerate small-energy series."""
    coeffs = (ParamPoly.symbol(spectral),) + (ZERO,) * (order - 1)
    return DispersionSeries(
        regime="small",
        series=TruncatedSeries(symbol, 0, coeffs, order),
        provenance="derived",
        spectral=spectral,
    )
