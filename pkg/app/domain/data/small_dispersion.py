"""
Strong-coupling dispersion series around the potential minima.

Each table gives the spectral parameter (δ, Λ or Λ̃) as a series in g⁻¹,
g = h^(1/2) for Mathieu and α^(1/2) for Lamé, with the Floquet exponent ν
(Mathieu) or μ (Lamé) as a parameter. Sources: standard strong-coupling
expansions of the Mathieu characteristic values and of the ellipsoidal
(Lamé) eigenvalues.
"""

from __future__ import annotations

from typing import Callable, Dict

from app.domain.model.dispersion import DispersionSeries
from app.domain.model.scalars import I, P, Q, ParamPoly
from app.domain.model.series import TruncatedSeries
from app.domain.services.problem_catalog import LAME_SMALL_SYMBOL, MATHIEU_SMALL_SYMBOL

_NU = P("nu")
_MU = P("mu")
_K = P("k")
_KP = P("kp")


def _literature(symbol: str, spectral: str, terms: Dict[int, ParamPoly]) -> DispersionSeries:
    return DispersionSeries(
        regime="small",
        series=TruncatedSeries.from_terms(symbol, terms, order=max(terms) + 1, lead=-1),
        provenance="paper-data",
        spectral=spectral,
        floquet="mu" if symbol == LAME_SMALL_SYMBOL else "nu",
    )


def mathieu_min0_dispersion() -> DispersionSeries:
    # λ = −2h + δ
    nu = _NU
    return _literature(
        MATHIEU_SMALL_SYMBOL,
        "delta",
        {
            -1: nu * 4,
            0: -(nu**2 * 4 - 1) * Q(1, 8),
            1: -(nu**3 * 4 - nu * 3) * Q(1, 64),
            2: -(nu**4 * 80 - nu**2 * 136 + 9) * Q(1, 4096),
        },
    )


def mathieu_minpi2_dispersion() -> DispersionSeries:
    # λ = 2h + δ
    nu = _NU
    return _literature(
        MATHIEU_SMALL_SYMBOL,
        "delta",
        {
            -1: nu * (-4),
            0: (nu**2 * 4 + 1) * Q(1, 8),
            1: (nu**3 * 4 + nu * 3) * Q(1, 64),
            2: (nu**4 * 80 + nu**2 * 136 + 9) * Q(1, 4096),
        },
    )


def lame_z0_dispersion() -> DispersionSeries:
    mu, k = _MU, _K
    one_k2 = k**2 + 1
    return _literature(
        LAME_SMALL_SYMBOL,
        "Lambda",
        {
            -1: I * k * mu * (-2),
            0: -one_k2 * (mu**2 * 4 - 1) * Q(1, 8),
            1: -I
            * k.inverse()
            * Q(1, 32)
            * (one_k2**2 * (mu**3 * 4 - mu * 3) - k**2 * 4 * (mu**3 * 4 - mu * 5)),
            2: one_k2 * (1 - k**2) ** 2 * (mu**4 * 80 - mu**2 * 136 + 9) * Q(1, 1024) * k.inverse() ** 2,
        },
    )


def lame_zk_dispersion() -> DispersionSeries:
    # Λ = −αk² + Λ̃
    mu, k, kp = _MU, _K, _KP
    c = 1 - k**2 * 2
    kp_inv = kp.inverse()
    return _literature(
        LAME_SMALL_SYMBOL,
        "Lambdat",
        {
            -1: I * k * mu * 2,
            0: c * (mu**2 * 4 * kp_inv**2 + 1) * Q(1, 8),
            1: I
            * k.inverse()
            * Q(1, 32)
            * (
                c**2 * kp_inv * (mu**3 * 4 * kp_inv**3 + mu * 3 * kp_inv)
                + k**2 * kp * 4 * (mu**3 * 4 * kp_inv**3 + mu * 5 * kp_inv)
            ),
            2: -c
            * Q(1, 1024)
            * k.inverse() ** 2
            * kp_inv**2
            * (mu**4 * 80 * kp_inv**4 + mu**2 * 136 * kp_inv**2 + 9),
        },
    )


SMALL_DISPERSIONS: Dict[str, Callable[[], DispersionSeries]] = {
    "mathieu-min0": mathieu_min0_dispersion,
    "mathieu-minpi2": mathieu_minpi2_dispersion,
    "lame-z0": lame_z0_dispersion,
    "lame-zK": lame_zk_dispersion,
}
