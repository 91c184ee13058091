"""
Printed small-energy wave functions as exact exponent tables.

Each builder takes the sign σ = ±1 of ψ± and returns the exponent order by
order in g⁻¹ as log terms plus a Jacobi/trig element. Entries marked
``substituted`` already have the spectral parameter replaced by ν (μ); the
others still carry δ, Λ or Λ̃.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from app.domain.exceptions import UnknownProblemError
from app.domain.model.dispersion import ClosedFormExponent, ClosedFormOrder, LogTerm
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import I, P, Q, ParamPoly

_NU = P("nu")
_MU = P("mu")
_K = P("k")
_KP = P("kp")
_DELTA = P("delta")
_LAMBDA = P("Lambda")
_LAMBDAT = P("Lambdat")

Orders = Dict[int, ClosedFormOrder]


def _t(coeff, sn: int = 0, cn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, trig=True)


def _j(coeff, sn: int = 0, cn: int = 0, dn: int = 0) -> JacobiElem:
    return JacobiElem.monomial(coeff, sn=sn, cn=cn, dn=dn)


def _log(coeff, pattern: str) -> LogTerm:
    return LogTerm(ParamPoly.coerce(coeff), pattern)


def _order(*logs: LogTerm, ring: JacobiElem | None = None) -> ClosedFormOrder:
    return ClosedFormOrder(logs=tuple(logs), ring=ring)


@dataclass(frozen=True)
class ClosedFormEntry:
    name: str
    problem_id: str
    substituted: bool
    flipped_upper: bool  # ψ₊ sits on the opposite branch to the catalog's v₋₁
    build: Callable[[int], Orders]

    def candidate(self, sign: int) -> ClosedFormExponent:
        return ClosedFormExponent(
            name=self.name,
            problem_id=self.problem_id,
            sign=sign,
            substituted=self.substituted,
            orders=self.build(sign),
        )

    def uses_flipped_branch(self, sign: int) -> bool:
        return self.flipped_upper if sign > 0 else not self.flipped_upper


# ---------------------------------------------------------------------------
# Mathieu, x* = 0
# ---------------------------------------------------------------------------


def _mathieu_min0_delta(s: int) -> Orders:
    return {
        -1: _order(ring=_t(I * 2 * s, cn=1)),
        0: _order(_log(Q(-1, 2), "sin")),
        1: _order(
            _log(I * s * (_DELTA * 8 - 1) * Q(1, 32), "tan(x/2)"),
            ring=_t(I * s * Q(3, 32), sn=-2, cn=1),
        ),
        2: _order(ring=_t(Q(-1, 128), sn=-4, cn=4) + _t(Q(-5, 128), sn=-4) + _t(_DELTA * Q(1, 16), sn=-2)),
    }


def _mathieu_min0_nu(s: int) -> Orders:
    nu = _NU
    second = JacobiElem(
        {
            (0, 0, 0): -(40 - nu**2 * 128),
            (0, 2, 0): -(nu**2 * 32 - 8),
            (0, 4, 0): -(16 - nu**2 * 32),
            (0, 1, 0): -(I * s * (nu**3 * 48 - nu * 164)),
            (0, 3, 0): -(I * s * (nu * 12 - nu**3 * 16)),
        },
        den_sn=4,
        trig=True,
    ) * Q(1, 1024)
    return {
        -1: _order(ring=_t(I * 2 * s, cn=1)),
        0: _order(_log(I * nu * s - Q(1, 2), "sin(x/2)"), _log(-I * nu * s - Q(1, 2), "cos(x/2)")),
        1: _order(ring=_t(nu * Q(1, 4), sn=-2, cn=2) + _t(I * s * (3 - nu**2 * 4) * Q(1, 32), sn=-2, cn=1)),
        2: _order(ring=second),
    }


# ---------------------------------------------------------------------------
# Mathieu, x* = π/2
# ---------------------------------------------------------------------------


def _mathieu_minpi2_delta(s: int) -> Orders:
    return {
        -1: _order(ring=_t(2 * s, sn=1)),
        0: _order(_log(Q(-1, 2), "cos")),
        1: _order(
            _log((_DELTA * 8 - 1) * Q(s, 32), "tan(x/2+pi/4)"),
            ring=_t(Q(-3 * s, 32), sn=1, cn=-2),
        ),
        2: _order(ring=_t(Q(1, 128), sn=4, cn=-4) + _t(Q(5, 128), cn=-4) + _t(_DELTA * Q(-1, 16), cn=-2)),
    }


def _mathieu_minpi2_nu(s: int) -> Orders:
    nu = _NU
    second = JacobiElem(
        {
            (0, 0, 0): nu**2 * 96 + 32,
            (2, 0, 0): nu**2 * 32 + 8,
            (4, 0, 0): ParamPoly.const(8),
            (1, 0, 0): -(nu * 164 + nu**3 * 48) * s,
            (3, 0, 0): (nu * 12 + nu**3 * 16) * s,
        },
        den_cn=4,
        trig=True,
    ) * Q(1, 1024)
    half_angle = "cos(x/2+pi/4)" if s > 0 else "sin(x/2+pi/4)"
    return {
        -1: _order(ring=_t(2 * s, sn=1)),
        0: _order(_log(nu + Q(1, 2), "sec"), _log(nu * 2, half_angle)),
        1: _order(ring=_t(nu * Q(1, 4), cn=-2) + _t(-(nu**2 * 4 + 3) * Q(s, 32), sn=1, cn=-2)),
        2: _order(ring=second),
    }


# ---------------------------------------------------------------------------
# Lamé, z* = 0
# ---------------------------------------------------------------------------


def _lame_z0_lambda(s: int) -> Orders:
    k = _K
    k_inv = k.inverse()
    return {
        -1: _order(_log(s, "dn-k*cn")),
        0: _order(_log(Q(-1, 2), "sn")),
        1: _order(
            _log(Q(s, 8), "dn-k*cn"),
            _log(-(_LAMBDA * 8 - 1 - k**2) * k_inv * Q(s, 16), "(dn+cn)/sn"),
            ring=_j(k_inv * Q(3 * s, 16), sn=-2, cn=1, dn=1),
        ),
        2: _order(
            ring=_j(k_inv**2 * Q(3, 16), sn=-4) + _j(-(_LAMBDA * 4 + 1 + k**2) * k_inv**2 * Q(1, 16), sn=-2)
        ),
    }


def _lame_z0_mu(s: int) -> Orders:
    k, mu = _K, _MU
    k_inv = k.inverse()
    c = (k**2 + 1) * (3 - mu**2 * 4)
    w = k_inv**2 * Q(1, 64)
    return {
        -1: _order(_log(s, "dn-k*cn")),
        0: _order(_log(Q(-1, 2), "sn"), _log(I * mu * s, "(dn+cn)/sn")),
        1: _order(
            _log(Q(s, 8), "dn-k*cn"),
            ring=_j(I * mu * k_inv * Q(1, 2), sn=-2) + _j((3 - mu**2 * 4) * k_inv * Q(s, 16), sn=-2, cn=1, dn=1),
        ),
        2: _order(
            ring=_j((12 - mu**2 * 32) * w, sn=-4)
            + _j(I * (mu * 38 - mu**3 * 8) * w * s, sn=-4, cn=1, dn=1)
            + _j(I * c * mu * w * s, sn=-2, cn=1, dn=1)
            + _j(c * w * (-2), sn=-2)
        ),
    }


def _lame_z0_leading(s: int) -> Orders:
    mu = _MU
    down, up = ("dn-cn", "dn+cn") if s > 0 else ("dn+cn", "dn-cn")
    return {
        -1: _order(_log(Q(s, 2), "dn-k*cn"), _log(Q(-s, 2), "dn+k*cn")),
        0: _order(_log(-I * mu * Q(1, 2) - Q(1, 4), down), _log(I * mu * Q(1, 2) - Q(1, 4), up)),
    }


# ---------------------------------------------------------------------------
# Lamé, z* = K
# ---------------------------------------------------------------------------


def _lame_zk_lambda(s: int) -> Orders:
    k, kp = _K, _KP
    k_inv = k.inverse()
    return {
        -1: _order(_log(s, "dn+i*k*sn")),
        0: _order(_log(Q(-1, 2), "cn")),
        1: _order(
            _log(Q(s, 8), "dn+i*k*sn"),
            _log(-I * (_LAMBDAT * 8 - 1 + k**2 * 2) * k_inv * kp.inverse() * Q(s, 16), "(dn+kp*sn)/cn"),
            ring=_j(I * k_inv * Q(3 * s, 16), sn=1, cn=-2, dn=1),
        ),
        2: _order(
            ring=_j(-(kp**2) * k_inv**2 * Q(3, 16), cn=-4)
            + _j((_LAMBDAT * 4 + 1 - k**2 * 2) * k_inv**2 * Q(1, 16), cn=-2)
        ),
    }


def _lame_zk_mu(s: int) -> Orders:
    k, kp, mu = _K, _KP, _MU
    k_inv, kp_inv = k.inverse(), _KP.inverse()
    c = (1 - k**2 * 2) * (kp**2 * 3 + mu**2 * 4)
    w = k_inv**2 * Q(1, 64)
    return {
        -1: _order(_log(s, "dn+i*k*sn")),
        0: _order(_log(Q(-1, 2), "cn"), _log(mu * kp_inv * s, "(dn+kp*sn)/cn")),
        1: _order(
            _log(Q(s, 8), "dn+i*k*sn"),
            ring=_j(I * mu * k_inv * Q(1, 2), cn=-2)
            + _j(I * (kp**2 * 3 + mu**2 * 4) * k_inv * kp_inv**2 * Q(s, 16), sn=1, cn=-2, dn=1),
        ),
        2: _order(
            ring=_j(-(kp**2 * 12 + mu**2 * 32) * w, cn=-4)
            + _j(-(kp**2 * mu * 38 + mu**3 * 8) * kp_inv**2 * w * s, sn=1, cn=-4, dn=1)
            + _j(-c * mu * kp_inv**4 * w * s, sn=1, cn=-2, dn=1)
            + _j(c * kp_inv**2 * w * 2, cn=-2)
        ),
    }


def _lame_zk_leading(s: int) -> Orders:
    mu = _MU
    half = mu * _KP.inverse() * Q(1, 2)
    down, up = ("dn-kp*sn", "dn+kp*sn") if s > 0 else ("dn+kp*sn", "dn-kp*sn")
    return {
        -1: _order(_log(Q(s, 2), "dn+i*k*sn"), _log(Q(-s, 2), "dn-i*k*sn")),
        0: _order(_log(-half - Q(1, 4), down), _log(half - Q(1, 4), up)),
    }


CLOSED_FORMS: Tuple[ClosedFormEntry, ...] = (
    ClosedFormEntry("mathieu-min0-delta", "mathieu-min0", False, True, _mathieu_min0_delta),
    ClosedFormEntry("mathieu-min0-nu", "mathieu-min0", True, True, _mathieu_min0_nu),
    ClosedFormEntry("mathieu-minpi2-delta", "mathieu-minpi2", False, False, _mathieu_minpi2_delta),
    ClosedFormEntry("mathieu-minpi2-nu", "mathieu-minpi2", True, False, _mathieu_minpi2_nu),
    ClosedFormEntry("lame-z0-Lambda", "lame-z0", False, False, _lame_z0_lambda),
    ClosedFormEntry("lame-z0-mu", "lame-z0", True, False, _lame_z0_mu),
    ClosedFormEntry("lame-z0-leading", "lame-z0", True, False, _lame_z0_leading),
    ClosedFormEntry("lame-zK-Lambdat", "lame-zK", False, False, _lame_zk_lambda),
    ClosedFormEntry("lame-zK-mu", "lame-zK", True, False, _lame_zk_mu),
    ClosedFormEntry("lame-zK-leading", "lame-zK", True, False, _lame_zk_leading),
)


def closed_form(name: str) -> ClosedFormEntry:
    for entry in CLOSED_FORMS:
        if entry.name == name:
            return entry
    raise UnknownProblemError(f"no closed form named {name!r}")
