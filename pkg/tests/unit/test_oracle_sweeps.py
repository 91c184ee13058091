import math

import pytest

from app.domain.exceptions import InvalidRunConfigError
from app.domain.model.reports import SweepPoint, SweepReport
from app.domain.services.oracle_sweeps import (
    kept_dispersion,
    large_energy_sweep,
    ratio_check,
    slope_check,
    small_energy_sweep,
)


def _synthetic(slope: float, variables=(6.0, 8.0, 10.0, 12.0), predicted: float = 9.0) -> SweepReport:
    points = tuple(SweepPoint(v, complex(v), complex(v), 3.0 * v**-slope, v**-slope) for v in variables)
    return SweepReport(name="synthetic", points=points, slope=slope, predicted_slope=predicted, constant=3.0)


def test_kept_mathieu_dispersion_drops_nu_to_the_eighth():
    kept, omitted, through = kept_dispersion("mathieu-large", 7)
    assert omitted == 8
    assert kept.order == 7
    assert not through.coefficient(8).is_zero()


def test_kept_dispersion_rejects_small_energy_problems():
    with pytest.raises(InvalidRunConfigError):
        kept_dispersion("mathieu-minpi2", 7)
    with pytest.raises(InvalidRunConfigError):
        kept_dispersion("mathieu-large", 0)


def test_slope_check_accepts_the_predicted_law():
    assert slope_check(_synthetic(9.1)).passed


def test_slope_check_reports_a_wrong_law():
    report = slope_check(_synthetic(6.0))
    assert not report.passed
    assert "predicted 9.000" in report.failures[0]


def test_slope_check_bounds_one_grid_value():
    report = slope_check(_synthetic(9.0), max_error=(10.0, 1e-12))
    assert not report.passed
    assert "at 10" in report.failures[0]


def test_ratio_check_on_an_exact_power_law():
    report = ratio_check(_synthetic(2.0, variables=(100.0, 400.0, 1600.0), predicted=2.0))
    assert report.passed
    assert report.details["ratios"] == pytest.approx([16.0, 16.0])


def test_ratio_check_flags_a_stalled_error():
    points = (
        SweepPoint(100.0, 0j, 0j, 1e-6, 1e-6),
        SweepPoint(400.0, 0j, 0j, 1e-6, 1e-6),
    )
    report = ratio_check(SweepReport("stalled", points, 0.0, 2.0, 1.0))
    assert not report.passed


@pytest.mark.slow
def test_mathieu_sweep_reaches_the_predicted_slope():
    report = large_energy_sweep("mathieu-large")
    assert report.predicted_slope == 9.0
    assert slope_check(report, max_error=(10.0, 1e-6)).passed
    assert math.isfinite(report.constant)


@pytest.mark.slow
def test_lame_sweep_reaches_the_predicted_slope():
    report = large_energy_sweep("lame-large", keep=5, alpha=6.0, q=0.05)
    assert slope_check(report).passed


@pytest.mark.slow
def test_small_energy_sweep_error_ratios():
    report = small_energy_sweep()
    assert ratio_check(report).passed
