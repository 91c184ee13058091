from __future__ import annotations

import cmath
from typing import Mapping, Optional, Union

from app.domain.exceptions import (
    PoleEvaluationError,
    RingMismatchError,
    UnboundParameterError,
    UnsupportedRingOperationError,
)
from app.domain.model.elliptic import EllipticParams
from app.domain.model.fourier import COS, FourierTrigPoly
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import ParamPoly
from app.domain.model.weierstrass import WeierstrassElem
from app.domain.services import elliptic_numerics as numerics

RingElem = Union[FourierTrigPoly, WeierstrassElem, JacobiElem]

_POLE_TOL = 1e-13


def ring_kind(a: object) -> str:
    if isinstance(a, FourierTrigPoly):
        return "fourier"
    if isinstance(a, WeierstrassElem):
        return "weierstrass"
    if isinstance(a, JacobiElem):
        return "trig" if a.trig else "jacobi"
    if isinstance(a, ParamPoly):
        return "scalar"
    raise RingMismatchError(f"{type(a).__name__} is not a ring element")


def _same_ring(a: object, b: object) -> None:
    ka, kb = ring_kind(a), ring_kind(b)
    if "scalar" in (ka, kb):
        return
    if ka != kb:
        raise RingMismatchError(f"{ka} vs {kb}")


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    _same_ring(a, b)
    return a * b


def ring_diff(a: RingElem) -> RingElem:
    if isinstance(a, ParamPoly):
        return ParamPoly()
    return a.diff()


def ring_antiderivative(a: RingElem) -> RingElem:
    if isinstance(a, JacobiElem):
        raise UnsupportedRingOperationError(
            "Jacobi elements have no exact antiderivative here; compare log-derivatives instead"
        )
    if isinstance(a, ParamPoly):
        raise UnsupportedRingOperationError("scalars carry no x-dependence to integrate")
    return a.antiderivative()


def ring_reflect(a: RingElem) -> RingElem:
    if isinstance(a, ParamPoly):
        return a
    return a.reflect()


def ring_equal(a: RingElem, b: RingElem) -> bool:
    _same_ring(a, b)
    if isinstance(a, ParamPoly) and isinstance(b, ParamPoly):
        return (a - b).is_zero()
    if isinstance(a, ParamPoly):
        a, b = b, a
    return a == b


def secular_part(a: RingElem) -> ParamPoly:
    """Coefficient of x (zero for rings without an x basis element)."""
    if isinstance(a, (FourierTrigPoly, WeierstrassElem)):
        return a.secular
    return ParamPoly()


# ---------------------------------------------------------------------------
# Numeric evaluation
# ---------------------------------------------------------------------------


def ring_eval(
    a: RingElem,
    x: complex,
    params: Mapping[str, complex],
    ell: Optional[EllipticParams] = None,
) -> complex:
    """Numeric value at x; lattice parameters are bound from ``ell`` unless overridden."""
    bindings = dict(ell.bindings()) if ell is not None else {}
    bindings.update(params)
    if isinstance(a, ParamPoly):
        return a.evaluate(bindings)
    if isinstance(a, FourierTrigPoly):
        return _eval_fourier(a, complex(x), bindings)
    if isinstance(a, WeierstrassElem):
        if ell is None:
            raise UnboundParameterError("Weierstrass evaluation needs elliptic parameters")
        return _eval_weierstrass(a, complex(x), bindings, ell)
    if isinstance(a, JacobiElem):
        return _eval_jacobi(a, complex(x), bindings, ell)
    raise RingMismatchError(f"{type(a).__name__} is not a ring element")


def _eval_fourier(a: FourierTrigPoly, x: complex, bindings: Mapping[str, complex]) -> complex:
    total = a.secular.evaluate(bindings) * x if not a.secular.is_zero() else 0j
    for (n, kind), c in a.modes.items():
        basis = cmath.cos(n * x) if kind == COS else cmath.sin(n * x)
        total += c.evaluate(bindings) * basis
    return total


def _eval_weierstrass(
    a: WeierstrassElem, x: complex, bindings: Mapping[str, complex], ell: EllipticParams
) -> complex:
    total = a.const.evaluate(bindings)
    if not a.secular.is_zero():
        total += a.secular.evaluate(bindings) * x
    if not a.zeta.is_zero():
        total += a.zeta.evaluate(bindings) * numerics.zeta_tilde(x, ell)
    for k, c in enumerate(a.derivs):
        if not c.is_zero():
            total += c.evaluate(bindings) * numerics.wp_tilde_derivative(k, x, ell)
    return total


def _eval_jacobi(
    a: JacobiElem,
    z: complex,
    bindings: Mapping[str, complex],
    ell: Optional[EllipticParams],
) -> complex:
    if a.trig:
        sn, cn, dn = cmath.sin(z), cmath.cos(z), 1 + 0j
    elif ell is not None:
        sn, cn, dn = (numerics.jacobi_from_nome(fn, z, ell.nome) for fn in ("sn", "cn", "dn"))
    else:
        if "k" not in bindings:
            raise UnboundParameterError("parameter 'k' is not bound")
        k = bindings["k"]
        sn, cn, dn = (numerics.jacobi(fn, z, k) for fn in ("sn", "cn", "dn"))
    den = sn**a.den_sn * cn**a.den_cn
    if abs(den) < _POLE_TOL:
        raise PoleEvaluationError(f"{a} has a pole at z={z}")
    total = 0j
    for (p, r, s), c in a.numerator.items():
        total += c.evaluate(bindings) * sn**p * cn**r * dn**s
    return total / den
