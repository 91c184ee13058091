from fractions import Fraction

import pytest

from app.application.use_cases.build_theta_matrix import BuildThetaMatrix, BuildThetaMatrixRequest
from app.domain.exceptions import InvalidRunConfigError


def test_builds_matrix_and_eta_coefficients():
    result = BuildThetaMatrix().execute(BuildThetaMatrixRequest(k=0, dim=5))
    assert result.matrix.dim == 5
    assert result.matrix[4, 4] == Fraction(7, 4)
    assert result.log_eta == (1, Fraction(3, 2), Fraction(4, 3), Fraction(7, 4))


def test_derivative_matrix():
    result = BuildThetaMatrix().execute(BuildThetaMatrixRequest(k=2, dim=4))
    assert result.matrix[3, 0] == 3
    assert result.matrix[0, 3] == 3


@pytest.mark.parametrize("kwargs", [{"dim": 0}, {"dim": 65}, {"k": -1}])
def test_rejects_out_of_range_requests(kwargs):
    with pytest.raises(InvalidRunConfigError):
        BuildThetaMatrix().execute(BuildThetaMatrixRequest(**kwargs))
