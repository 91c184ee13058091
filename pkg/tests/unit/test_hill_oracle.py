import cmath

import pytest

from app.domain.exceptions import IntegrationError
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.series import TruncatedSeries
from app.domain.services.dispersion import large_energy_exponent
from app.domain.services.hill_oracle import (
    NumericExponent,
    exponent_from_densities,
    exponent_from_series,
    floquet_error,
    monodromy,
    potential_callback,
    standing_wave_eigenvalue,
    wavefunction_error,
)
from app.domain.services.problem_catalog import MATHIEU_SMALL_SYMBOL, mathieu_minpi2_problem, mathieu_potential
from app.domain.services.riccati import large_energy_densities, small_energy_densities


def _free(x):
    return 0j


def test_free_monodromy_recovers_nu():
    nu = 2.3
    result = monodromy(_free, -nu * nu, cmath.pi)

    assert result.nu == pytest.approx(nu, abs=1e-10)
    assert result.wronskian_defect < 1e-10
    assert result.trace == pytest.approx(2 * cmath.cos(nu * cmath.pi), abs=1e-10)
    assert not result.near_band_edge


def test_floquet_error_reports_the_gap():
    report = floquet_error(_free, -6.25, 2.501, cmath.pi, omitted_term_bound=1e-3)
    assert report.abs_err == pytest.approx(1e-3, rel=1e-6)
    assert report.ratio == pytest.approx(1.0, rel=1e-6)


def test_mathieu_potential_callback_feeds_the_integrator():
    u = potential_callback(FourierTrigPoly.cos(2, 2), {})
    assert u(0.0) == pytest.approx(2)
    result = monodromy(u, -100.0, cmath.pi)
    # far above the potential the exponent sits close to the free one
    assert abs(result.nu - 10) < 0.05


def test_tolerance_floor():
    with pytest.raises(IntegrationError):
        monodromy(_free, -1.0, cmath.pi, tol=1e-15)


def test_free_standing_wave():
    # cos(2x) is the even standing wave with zero slope at pi/2
    lam = standing_wave_eigenvalue(_free, (-5.0, -3.0), cmath.pi / 2)
    assert lam == pytest.approx(-4.0, abs=1e-9)


def test_bracket_without_a_standing_wave_raises():
    with pytest.raises(IntegrationError):
        standing_wave_eigenvalue(_free, (-3.5, -3.0), cmath.pi / 2)


def test_exact_exponent_has_no_wavefunction_error():
    nu = 3.0
    exponent = NumericExponent(value=lambda x: 1j * nu * x, slope=lambda x: 1j * nu, curvature=lambda x: 0j)

    report = wavefunction_error(exponent, -nu * nu, _free, [0.0, 0.5, 1.0])

    assert report.max_error < 1e-9
    assert report.max_residual == pytest.approx(0, abs=1e-12)


def test_wavefunction_grid_must_increase():
    exponent = NumericExponent(value=lambda x: 0j, slope=lambda x: 0j, curvature=lambda x: 0j)
    with pytest.raises(IntegrationError):
        wavefunction_error(exponent, 0.0, _free, [0.0, 1.0, 0.5])


def _mathieu_large_error(nu, order, h=1.0):
    # lambda = -nu^2 exactly, so only the truncated exponent contributes
    exponent = large_energy_exponent(large_energy_densities(mathieu_potential(), order))
    numeric = exponent_from_series(exponent.series, -1j / nu, {"h": h})
    u = potential_callback(mathieu_potential().potential, {"h": h})
    return wavefunction_error(numeric, -nu * nu, u, [0.0, 0.25, 0.5, 0.75, 1.0]).max_error


def test_large_energy_wavefunction_error_falls_with_nu():
    errors = [_mathieu_large_error(nu, 4) for nu in (10.0, 20.0, 40.0)]
    assert errors[0] < 1e-4
    # the first omitted term is nu^-5; allow a generous margin per doubling
    assert errors[0] / errors[1] > 6
    assert errors[1] / errors[2] > 6


def test_large_energy_wavefunction_error_falls_with_order():
    assert _mathieu_large_error(20.0, 4) < _mathieu_large_error(20.0, 2)


def _mathieu_minpi2_error(h, order, delta=-3.0):
    g = h**0.5
    densities = small_energy_densities(mathieu_minpi2_problem(), order)
    series = TruncatedSeries.from_terms(
        MATHIEU_SMALL_SYMBOL, {ell: d for ell, d in enumerate(densities, start=-1)}, order + 1, lead=-1
    )
    grid = [0.2, 0.4, 0.6, 0.8, 1.0]
    numeric = exponent_from_densities(series, 1 / g, {"delta": delta}, x0=grid[0])
    u = potential_callback(mathieu_potential().potential, {"h": h})
    # lambda = 2h + delta around the minimum at pi/2, sampled away from its pole
    return wavefunction_error(numeric, 2 * h + delta, u, grid)


def test_small_energy_wavefunction_error_falls_with_coupling():
    coarse = _mathieu_minpi2_error(100.0, 2)
    fine = _mathieu_minpi2_error(400.0, 2)
    assert fine.max_error < 1e-2
    assert coarse.max_error / fine.max_error > 3
    assert fine.max_residual < coarse.max_residual
