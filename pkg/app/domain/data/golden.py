"""
Printed coefficient tables used as golden values.

Large energy: series in ν⁻¹ ("nu^-1"). Small energy: the density tables
v₋₁..v₂ with the overall unit taken out.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Tuple

from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import I, P, Q
from app.domain.model.series import TruncatedSeries
from app.domain.model.weierstrass import WeierstrassElem

NU_INV = "nu^-1"

_H = P("h")
_ALPHA = P("alpha")
_Z1 = P("zeta1")
_G2 = P("g2")
_G3 = P("g3")
_K = P("k")
_KP = P("kp")


def mathieu_large_dispersion() -> TruncatedSeries:
    """λ through ν⁻⁶."""
    h = _H
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -2: Q(-1),
            2: -(h**2) * Q(1, 2),
            4: -(h**2) * Q(1, 2),
            6: -(h**2 * 16 + h**4 * 5) * Q(1, 32),
        },
        order=7,
        lead=-2,
    )


def mathieu_large_sqrt_lambda() -> TruncatedSeries:
    """√λ through ν⁻⁷ on the branch iν + …."""
    h = _H
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -1: I,
            3: I * h**2 * Q(1, 4),
            5: I * h**2 * Q(1, 4),
            7: I * (h**2 * 16 + h**4 * 3) * Q(1, 64),
        },
        order=8,
        lead=-1,
    )


def mathieu_large_exponent(sign: int) -> TruncatedSeries:
    """Exponent of ψ± through ν⁻³."""
    h, s = _H, sign
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -1: FourierTrigPoly.linear(I * s),
            0: FourierTrigPoly(),
            1: FourierTrigPoly.sin(2, -I * h * Q(s, 2)),
            2: FourierTrigPoly.cos(2, h * Q(1, 2)),
            3: FourierTrigPoly.sin(2, -I * h * Q(s, 2)) + FourierTrigPoly.sin(4, -I * h**2 * Q(s, 16)),
        },
        order=4,
        lead=-1,
    )


def lame_large_dispersion() -> TruncatedSeries:
    """λ through ν⁻⁴."""
    a, z1, g2, g3 = _ALPHA, _Z1, _G2, _G3
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -2: Q(-1),
            2: a**2 * (z1**2 * 12 - g2) * Q(1, 48),
            4: (a**3 * (z1**3 * 20 - g2 * z1 - g3) - a**2 * (g2 * z1 * 2 - g3 * 3)) * Q(1, 80),
        },
        order=5,
        lead=-2,
    )


def lame_large_exponent(sign: int) -> TruncatedSeries:
    a, z1, s = _ALPHA, _Z1, sign
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -1: WeierstrassElem.linear(I * s),
            0: WeierstrassElem(),
            1: WeierstrassElem.zeta_tilde(I * a * Q(s, 2)),
            2: WeierstrassElem.wp(0, a * Q(1, 4)),
            3: WeierstrassElem.zeta_tilde(I * a**2 * z1 * Q(s, 4))
            + WeierstrassElem.wp(1, -I * (a**2 - a * 6) * Q(s, 48)),
        },
        order=4,
        lead=-1,
    )


# ---------------------------------------------------------------------------
# Small-energy density tables
# ---------------------------------------------------------------------------


def _t(coeff, sn: int = 0, cn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, trig=True)


def _j(coeff, sn: int = 0, cn: int = 0, dn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, dn=dn)


def mathieu_min0_table() -> List[JacobiElem]:
    d = P("delta")
    return [
        _t(I * 2, sn=1),
        _t(Q(-1, 2), sn=-1, cn=1),
        (_t(1, sn=-3, cn=2) + _t(2, sn=-3) + _t(d * (-4), sn=-1)) * (I * Q(1, 16)),
        (_t(1, sn=-5, cn=3) + _t(5, sn=-5, cn=1) + _t(d * (-4), sn=-3, cn=1)) * Q(1, 32),
    ]


def mathieu_minpi2_table() -> List[JacobiElem]:
    d = P("delta")
    return [
        _t(2, cn=1),
        _t(Q(1, 2), sn=1, cn=-1),
        (_t(1, sn=2, cn=-3) + _t(2, cn=-3) + _t(d * (-4), cn=-1)) * Q(-1, 16),
        (_t(1, sn=3, cn=-5) + _t(5, sn=1, cn=-5) + _t(d * (-4), sn=1, cn=-3)) * Q(1, 32),
    ]


def lame_z0_table() -> List[JacobiElem]:
    k, lam = _K, P("Lambda")
    k_inv = k.inverse()
    inner = _j(lam * 4 + 1 + k**2, sn=-2) - _j(3, sn=-4)
    return [
        _j(k, sn=1),
        _j(Q(-1, 2), sn=-1, cn=1, dn=1),
        _j(k * Q(1, 8), sn=1) + _j((lam * 4 + 1 + k**2) * k_inv * Q(1, 8), sn=-1) - _j(k_inv * Q(3, 8), sn=-3),
        inner.diff() * (k_inv**2 * Q(-1, 16)),
    ]


def lame_zk_table() -> List[JacobiElem]:
    k, kp, lam = _K, _KP, P("Lambdat")
    k_inv = k.inverse()
    inner = _j(lam * 4 + 1 - k**2 * 2, cn=-2) - _j(kp**2 * 3, cn=-4)
    return [
        _j(k, cn=1),
        _j(-I * Q(1, 2), sn=1, cn=-1, dn=1),
        _j(k * Q(1, 8), cn=1) - _j((lam * 4 + 1 - k**2 * 2) * k_inv * Q(1, 8), cn=-1) + _j(kp**2 * k_inv * Q(3, 8), cn=-3),
        inner.diff() * (-I * k_inv**2 * Q(1, 16)),
    ]


SMALL_TABLES: Dict[str, Callable[[], List[JacobiElem]]] = {
    "mathieu-min0": mathieu_min0_table,
    "mathieu-minpi2": mathieu_minpi2_table,
    "lame-z0": lame_z0_table,
    "lame-zK": lame_zk_table,
}

LARGE_TABLES: Dict[str, Tuple[Callable[[], TruncatedSeries], Callable[[int], TruncatedSeries]]] = {
    "mathieu-large": (mathieu_large_dispersion, mathieu_large_exponent),
    "lame-large": (lame_large_dispersion, lame_large_exponent),
}


# ---------------------------------------------------------------------------
# Extended large-energy tables
# ---------------------------------------------------------------------------

EXTENDED_MARKER = "extended, unverified-by-paper"


def mathieu_large_dispersion_extended() -> TruncatedSeries:
    """
    λ through ν⁻¹⁰; extended, unverified-by-paper.

    Re-expanded in ν⁻² from the classical non-integer-order characteristic
    value a = ν² + q²/(2(ν²−1)) + …, with q = h and λ = −a. The q⁸ term
    starts at ν⁻¹⁴, so every coefficient here is complete.
    """
    h = _H
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -2: Q(-1),
            2: -(h**2) * Q(1, 2),
            4: -(h**2) * Q(1, 2),
            6: -(h**2 * 16 + h**4 * 5) * Q(1, 32),
            8: -(h**2 * 8 + h**4 * 21) * Q(1, 16),
            10: -(h**2 * 32 + h**4 * 438 + h**6 * 9) * Q(1, 64),
        },
        order=11,
        lead=-2,
    )


def mathieu_large_sqrt_lambda_extended() -> TruncatedSeries:
    """√λ through ν⁻¹¹; extended, unverified-by-paper."""
    h = _H
    return TruncatedSeries.from_terms(
        NU_INV,
        {
            -1: I,
            3: I * h**2 * Q(1, 4),
            5: I * h**2 * Q(1, 4),
            7: I * (h**2 * 16 + h**4 * 3) * Q(1, 64),
            9: I * (h**2 * 8 + h**4 * 19) * Q(1, 32),
            11: I * (h**2 * 64 + h**4 * 852 + h**6 * 15) * Q(1, 256),
        },
        order=12,
        lead=-1,
    )


def mathieu_large_exponent_extended(sign: int) -> TruncatedSeries:
    """Exponent of ψ± through ν⁻⁵; extended, unverified-by-paper."""
    h, s = _H, sign
    lower = mathieu_large_exponent(sign)
    terms = dict(lower.items())
    terms[4] = FourierTrigPoly.cos(2, h * Q(1, 2)) + FourierTrigPoly.cos(4, h**2 * Q(1, 4))
    terms[5] = (
        FourierTrigPoly.sin(2, -I * (h * 8 + h**3) * Q(s, 16))
        + FourierTrigPoly.sin(4, -I * h**2 * Q(s * 11, 16))
        + FourierTrigPoly.sin(6, -I * h**3 * Q(s, 48))
    )
    return TruncatedSeries.from_terms(NU_INV, terms, order=6, lead=-1)


EXTENDED_TABLES: Dict[
    str,
    Tuple[Callable[[], TruncatedSeries], Callable[[], TruncatedSeries], Callable[[int], TruncatedSeries]],
] = {
    "mathieu-large": (
        mathieu_large_dispersion_extended,
        mathieu_large_sqrt_lambda_extended,
        mathieu_large_exponent_extended,
    ),
}


# ---------------------------------------------------------------------------
# Shifted Weierstrass functions near q = 0
# ---------------------------------------------------------------------------

HALF_NOME = "q^1/2"


def shifted_wp_qexpansion() -> TruncatedSeries:
    """℘̃(x + ω₂)/(π/2ω₁)² through q^(3/2), in χ = πx/(2ω₁)."""
    return TruncatedSeries.from_terms(
        HALF_NOME,
        {
            1: FourierTrigPoly.cos(2, -8),
            2: FourierTrigPoly.cos(4, -16),
            3: FourierTrigPoly.cos(2, -8) + FourierTrigPoly.cos(6, -24),
        },
        order=4,
        lead=0,
    )


def shifted_zeta_qexpansion() -> TruncatedSeries:
    """ζ̃(x + ω₂)/(π/2ω₁) through q^(3/2), up to a constant."""
    return TruncatedSeries.from_terms(
        HALF_NOME,
        {
            1: FourierTrigPoly.sin(2, 4),
            2: FourierTrigPoly.sin(4, 4),
            3: FourierTrigPoly.sin(2, 4) + FourierTrigPoly.sin(6, 4),
        },
        order=4,
        lead=0,
    )
