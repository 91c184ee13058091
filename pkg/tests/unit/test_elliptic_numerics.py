"""Double-precision elliptic numerics against mpmath at higher precision."""

import cmath
import math

import mpmath
import pytest
from sympy import divisor_sigma

from app.domain.exceptions import InvalidEllipticParametersError, PoleEvaluationError
from app.domain.services import elliptic_numerics as numerics


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_theta_matches_mpmath(j):
    z, nome = 0.3 + 0.1j, 0.1
    assert numerics.theta(j, z, nome=nome) == pytest.approx(complex(mpmath.jtheta(j, z, nome)), abs=1e-14)
    assert numerics.theta(j, z, nome=nome, derivative=1) == pytest.approx(
        complex(mpmath.jtheta(j, z, nome, 1)), abs=1e-13
    )


@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_log_theta_derivative_matches_the_quotient(j):
    z, nome = 0.4 + 0.05j, 0.12
    expected = complex(mpmath.jtheta(j, z, nome, 1) / mpmath.jtheta(j, z, nome))
    assert numerics.log_theta_derivative(j, 1, z, nome) == pytest.approx(expected, abs=1e-12)


def test_theta_rejects_a_nome_outside_the_disc():
    with pytest.raises(InvalidEllipticParametersError):
        numerics.theta(3, 0.1, q=1.2)
    with pytest.raises(InvalidEllipticParametersError):
        numerics.theta(3, 0.1)


def test_lattice_invariants():
    ell = numerics.elliptic_params_from_q(0.02)
    assert ell.e1 + ell.e2 + ell.e3 == pytest.approx(0, abs=1e-12)
    assert ell.k**2 == pytest.approx((ell.e3 - ell.e2) / (ell.e1 - ell.e2), rel=1e-12)
    assert ell.K == pytest.approx(complex(mpmath.ellipk(ell.k**2)), rel=1e-12)
    assert ell.omega1 == pytest.approx(math.pi / 2)


def test_wp_solves_its_differential_equation():
    ell = numerics.elliptic_params_from_q(0.02)
    x = 0.4 + 0.2j
    wp = numerics.weierstrass("wp", x, ell)
    wp_prime = numerics.weierstrass("wp_prime", x, ell)
    assert wp_prime**2 == pytest.approx(4 * wp**3 - ell.g2 * wp - ell.g3, rel=1e-10)


def test_wp_at_the_half_periods():
    ell = numerics.elliptic_params_from_q(0.05)
    assert numerics.weierstrass("wp", ell.omega1, ell) == pytest.approx(ell.e1, rel=1e-11)
    assert numerics.weierstrass("wp", ell.omega2, ell) == pytest.approx(ell.e2, rel=1e-11)


def test_zeta_differentiates_to_minus_wp():
    ell = numerics.elliptic_params_from_q(0.02)
    x, step = 0.7 + 0.1j, 1e-5
    slope = (numerics.zeta_tilde(x + step, ell) - numerics.zeta_tilde(x - step, ell)) / (2 * step)
    assert slope == pytest.approx(-numerics.wp_tilde_derivative(0, x, ell), rel=1e-8)


def test_wp_has_a_pole_at_the_origin():
    ell = numerics.elliptic_params_from_q(0.02)
    with pytest.raises(PoleEvaluationError):
        numerics.weierstrass("wp", 0, ell)


def test_eisenstein_series_match_divisor_sums():
    q = 0.05
    e4 = 1 + 240 * sum(int(divisor_sigma(n, 3)) * q**n for n in range(1, 60))
    e6 = 1 - 504 * sum(int(divisor_sigma(n, 5)) * q**n for n in range(1, 60))
    assert numerics.eisenstein_E4(q) == pytest.approx(e4, rel=1e-13)
    assert numerics.eisenstein_E6(q) == pytest.approx(e6, rel=1e-13)


def test_log_eta_matches_the_q_pochhammer():
    q = 0.03
    assert numerics.log_eta(q) == pytest.approx(complex(mpmath.log(mpmath.qp(q, q))), abs=1e-14)


def test_jacobi_functions_match_mpmath():
    k, z = 0.6, 0.8 + 0.1j
    m = k * k
    for fn in ("sn", "cn", "dn"):
        assert numerics.jacobi(fn, z, k) == pytest.approx(complex(mpmath.ellipfun(fn, z, m=m)), abs=1e-12)
    assert numerics.jacobi("K", 0, k) == pytest.approx(float(mpmath.ellipk(m)), rel=1e-12)
    assert numerics.jacobi_nome(k) == pytest.approx(float(mpmath.qfrom(m=m)), rel=1e-12)


def test_jacobi_trigonometric_limit():
    assert numerics.jacobi("sn", 0.5, 0) == pytest.approx(cmath.sin(0.5))
    assert numerics.jacobi("dn", 0.5, 0) == 1


def test_degenerate_and_invalid_lattices():
    with pytest.raises(InvalidEllipticParametersError):
        numerics.jacobi("sn", 0.1, 1.0)
    with pytest.raises(InvalidEllipticParametersError):
        numerics.elliptic_params(1.0, -1j)
    with pytest.raises(InvalidEllipticParametersError):
        numerics.elliptic_params_from_q(0)


def test_weierstrass_and_jacobi_forms_agree():
    ell = numerics.elliptic_params_from_q(0.02)
    report = numerics.jacobi_map_check(ell, alpha=6.0, Lambda=0.3, z_samples=[0.3, 0.6, 0.9, 1.2])
    assert report.passed, report.failures
    assert report.checked == 4
