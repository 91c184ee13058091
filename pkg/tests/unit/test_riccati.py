import pytest

from app.domain.exceptions import ResidualError, TruncationError
from app.domain.model.fourier import FourierTrigPoly
from app.domain.model.scalars import P, Q
from app.domain.services.problem_catalog import (
    flipped_branch,
    free_potential,
    lame_potential,
    lame_z0_problem,
    mathieu_minpi2_problem,
    mathieu_potential,
)
from app.domain.services.riccati import (
    assert_residual_free,
    large_energy_densities,
    large_energy_residual,
    numeric_small_residual,
    small_energy_densities,
    small_energy_residual,
)


def test_free_potential_has_no_corrections():
    assert all(v.is_zero() for v in large_energy_densities(free_potential(), 5))


def test_first_mathieu_densities():
    h = P("h")
    v1, v2, v3 = large_energy_densities(mathieu_potential(), 3)
    assert v1 == FourierTrigPoly.cos(2, h)
    assert v2 == FourierTrigPoly.sin(2, h)
    # v3 = -(v2' + v1^2)/2
    assert v3 == FourierTrigPoly.cos(2, -h) + FourierTrigPoly.constant(-(h**2) * Q(1, 4)) + FourierTrigPoly.cos(
        4, -(h**2) * Q(1, 4)
    )


def test_lower_sign_flips_the_odd_densities():
    h = P("h")
    v1, v2 = large_energy_densities(mathieu_potential(), 2, sign=-1)
    assert v1 == FourierTrigPoly.cos(2, -h)
    assert v2 == FourierTrigPoly.sin(2, h)


@pytest.mark.parametrize("potential", [mathieu_potential(), lame_potential()], ids=["mathieu", "lame"])
@pytest.mark.parametrize("sign", [1, -1])
def test_large_energy_densities_solve_the_relation_exactly(potential, sign):
    densities = large_energy_densities(potential, 6, sign)
    assert_residual_free(large_energy_residual(potential, densities, sign))


def test_tampered_density_leaves_a_residual():
    densities = large_energy_densities(mathieu_potential(), 3)
    densities[1] = densities[1] + FourierTrigPoly.cos(2)
    with pytest.raises(ResidualError):
        assert_residual_free(large_energy_residual(mathieu_potential(), densities))


def test_large_energy_order_must_be_positive():
    with pytest.raises(TruncationError):
        large_energy_densities(mathieu_potential(), 0)


@pytest.mark.parametrize("problem", [mathieu_minpi2_problem(), lame_z0_problem()], ids=["mathieu", "lame"])
def test_small_energy_densities_solve_the_relation_exactly(problem):
    densities = small_energy_densities(problem, 4)
    assert densities[0] == problem.branch
    assert len(densities) == 6
    assert_residual_free(small_energy_residual(problem, densities))


def test_flipped_branch_negates_the_odd_orders():
    problem = mathieu_minpi2_problem()
    upper = small_energy_densities(problem, 2)
    lower = small_energy_densities(flipped_branch(problem), 2)
    assert lower[0] == -upper[0]
    assert lower[1] == upper[1]
    assert lower[2] == -upper[2]


def test_numeric_residual_falls_with_coupling():
    problem = mathieu_minpi2_problem()
    densities = small_energy_densities(problem, 3)
    params = {"delta": 0.5}
    coarse = numeric_small_residual(problem, densities, 0.3, 10.0, params)
    fine = numeric_small_residual(problem, densities, 0.3, 40.0, params)
    assert fine < coarse / 16


@pytest.mark.parametrize("potential", [mathieu_potential(), lame_potential()], ids=["mathieu", "lame"])
@pytest.mark.parametrize("sign", [1, -1])
def test_higher_order_runs_reproduce_the_lower_densities(potential, sign):
    short = large_energy_densities(potential, 3, sign)
    long = large_energy_densities(potential, 6, sign)
    assert len(long) == 6
    assert all(a == b for a, b in zip(short, long[:3]))
