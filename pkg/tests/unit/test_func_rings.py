import cmath
import math

import mpmath
import pytest

from app.domain.exceptions import (
    NonMonomialDivisionError,
    PoleEvaluationError,
    RingMismatchError,
    UnsupportedRingOperationError,
)
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.jacobi import JacobiElem
from app.domain.model.scalars import P, Q
from app.domain.model.weierstrass import WeierstrassElem
from app.domain.services import elliptic_numerics as numerics
from app.domain.services.func_rings import (
    ring_antiderivative,
    ring_diff,
    ring_equal,
    ring_eval,
    ring_kind,
    ring_mul,
    ring_reflect,
    secular_part,
)


# ---------------------------------------------------------------------------
# Fourier
# ---------------------------------------------------------------------------


def test_cosine_square_linearizes():
    c = FourierTrigPoly.cos(1)
    assert c * c == FourierTrigPoly.constant(Q(1, 2)) + FourierTrigPoly.cos(2, Q(1, 2))


def test_fourier_derivative_and_antiderivative():
    assert ring_diff(FourierTrigPoly.sin(2)) == FourierTrigPoly.cos(2, 2)
    assert ring_antiderivative(FourierTrigPoly.cos(2)) == FourierTrigPoly.sin(2, Q(1, 2))
    # the mean integrates to a secular term
    assert secular_part(ring_antiderivative(FourierTrigPoly.constant(P("h")))) == P("h")


def test_fourier_reflection_flips_sines():
    f = FourierTrigPoly.cos(1) + FourierTrigPoly.sin(3)
    assert ring_reflect(f) == FourierTrigPoly.cos(1) - FourierTrigPoly.sin(3)


def test_secular_products_leave_the_ring():
    with pytest.raises(UnsupportedRingOperationError):
        FourierTrigPoly.linear() * FourierTrigPoly.cos(1)


def test_fourier_evaluation():
    f = FourierTrigPoly.cos(2, P("h")) + FourierTrigPoly.linear(3)
    assert ring_eval(f, 0.3, {"h": 2.0}) == pytest.approx(2 * math.cos(0.6) + 0.9)


# ---------------------------------------------------------------------------
# Weierstrass
# ---------------------------------------------------------------------------


def test_wp_square_reduces_through_the_curve():
    # wp'' = 6 wp^2 - g2/2 with wpt = wp + zeta1
    wpt = WeierstrassElem.wp(0)
    expected = WeierstrassElem(
        const=P("g2") / 12 - P("zeta1", 2),
        derivs=(2 * P("zeta1"), Q(0), Q(1, 6)),
    )
    assert wpt * wpt == expected


def test_zeta_tilde_differentiates_to_minus_wp():
    assert ring_diff(WeierstrassElem.zeta_tilde()) == WeierstrassElem.wp(0, -1)
    assert ring_antiderivative(WeierstrassElem.wp(2)) == WeierstrassElem.wp(1)


def test_wp_derivative_square_is_the_cubic():
    # wp'^2 = 4 wp^3 - g2 wp - g3, checked against its own derivative
    d = WeierstrassElem.wp(1)
    square = d * d
    assert ring_diff(square) == 2 * d * WeierstrassElem.wp(2)


def test_weierstrass_reflection_parity():
    f = WeierstrassElem.wp(1) + WeierstrassElem.wp(2) + WeierstrassElem.zeta_tilde()
    assert ring_reflect(f) == WeierstrassElem.wp(2) - WeierstrassElem.wp(1) - WeierstrassElem.zeta_tilde()


def test_zeta_products_are_unsupported():
    with pytest.raises(UnsupportedRingOperationError):
        WeierstrassElem.zeta_tilde() * WeierstrassElem.wp(0)


def test_weierstrass_evaluation_matches_numerics():
    ell = numerics.elliptic_params_from_q(0.02)
    x = 0.4 + 0.3j
    value = ring_eval(WeierstrassElem.wp(0, 2), x, {}, ell)
    assert value == pytest.approx(2 * numerics.wp_tilde_derivative(0, x, ell))


# ---------------------------------------------------------------------------
# Jacobi
# ---------------------------------------------------------------------------


def test_jacobi_identities():
    sn, cn, dn = JacobiElem.sn(), JacobiElem.cn(), JacobiElem.dn()
    assert sn * sn + cn * cn == 1
    assert (sn * sn + cn * cn - 1).is_zero()
    assert not (sn * sn + cn * cn).is_zero()
    assert dn * dn == 1 - P("k", 2) * sn * sn
    assert ring_diff(sn) == cn * dn
    assert ring_diff(cn) == -(sn * dn)


def test_jacobi_quotient_derivative():
    # (1/sn)' = -cn dn / sn^2
    inv_sn = JacobiElem.monomial(sn=-1)
    assert ring_diff(inv_sn) == -(JacobiElem.cn() * JacobiElem.dn()) / JacobiElem.monomial(sn=2)


def test_jacobi_division_needs_a_monomial():
    with pytest.raises(NonMonomialDivisionError):
        JacobiElem.sn() / (JacobiElem.sn() + JacobiElem.cn())
    with pytest.raises(NonMonomialDivisionError):
        JacobiElem.sn() / JacobiElem.dn()


def test_trig_and_jacobi_do_not_mix():
    with pytest.raises(RingMismatchError):
        JacobiElem.sn(trig=True) + JacobiElem.sn()
    assert ring_kind(JacobiElem.sn(trig=True)) == "trig"
    assert ring_kind(JacobiElem.sn()) == "jacobi"


def test_jacobi_has_no_antiderivative():
    with pytest.raises(UnsupportedRingOperationError):
        ring_antiderivative(JacobiElem.sn())


def test_jacobi_evaluation_matches_mpmath():
    k, z = 0.6, 0.7
    value = ring_eval(JacobiElem.sn() * JacobiElem.dn(), z, {"k": k})
    m = k * k
    expected = complex(mpmath.ellipfun("sn", z, m=m) * mpmath.ellipfun("dn", z, m=m))
    assert value == pytest.approx(expected, abs=1e-12)


def test_trig_limit_evaluates_with_sine():
    assert ring_eval(JacobiElem.sn(trig=True), 0.4, {}) == pytest.approx(cmath.sin(0.4))


def test_evaluation_at_a_pole_raises():
    with pytest.raises(PoleEvaluationError):
        ring_eval(JacobiElem.monomial(sn=-1, trig=True), 0.0, {})


# ---------------------------------------------------------------------------
# Cross-ring rules
# ---------------------------------------------------------------------------


def test_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        ring_mul(FourierTrigPoly.cos(1), WeierstrassElem.wp(0))
    with pytest.raises(RingMismatchError):
        ring_equal(FourierTrigPoly.cos(1), JacobiElem.sn())


def test_scalars_act_on_every_ring():
    assert ring_equal(ring_mul(FourierTrigPoly.cos(1), P("h")), FourierTrigPoly.cos(1, P("h")))
    assert ring_kind(P("h")) == "scalar"
