from fractions import Fraction

import pytest

from app.domain.exceptions import NonMonomialDivisionError, UnboundParameterError
from app.domain.model.scalars import I_G, ONE, GaussianRational, P, ParamPoly, Q


def test_gaussian_product_with_conjugate_is_the_norm():
    z = GaussianRational(Fraction(1), Fraction(1))
    assert z * z.conjugate() == 2
    assert z.norm() == 2


def test_gaussian_inverse_and_division():
    z = GaussianRational(Fraction(3), Fraction(4))
    assert z * z.inverse() == 1
    assert (z / z) == 1
    assert I_G * I_G == -1


def test_gaussian_text_parses_back():
    for value in (
        GaussianRational(Fraction(1, 2), Fraction(-3)),
        GaussianRational(Fraction(0), Fraction(3, 4)),
        GaussianRational(Fraction(-7, 5)),
    ):
        assert GaussianRational.parse(str(value)) == value


def test_gaussian_parse_rejects_garbage():
    with pytest.raises(ValueError):
        GaussianRational.parse("one half")


def test_gaussian_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        GaussianRational().inverse()


def test_complementary_modulus_squares_away():
    # k'^2 = 1 - k^2
    assert P("kp", 2) == 1 - P("k", 2)
    assert P("kp", 3) == P("kp") - P("kp") * P("k", 2)


def test_negative_powers_of_kp_are_cleared_for_zero_test():
    assert P("kp", -2) * (1 - P("k", 2)) == 1
    assert (P("kp", -1) * (1 - P("k", 2)) - P("kp")).is_zero()


def test_polynomial_arithmetic_and_evaluation():
    poly = 2 * P("h") + 1
    assert poly.evaluate({"h": 3}) == 7
    assert (poly * poly).evaluate({"h": 1}) == 9
    assert Q(1, 2, imag=True).evaluate({}) == 0.5j


def test_evaluation_binds_kp_from_k():
    assert P("kp", 1).evaluate({"k": 0.6}) == pytest.approx(0.8)


def test_evaluation_with_missing_parameter_raises():
    with pytest.raises(UnboundParameterError):
        P("alpha").evaluate({"h": 1})


def test_only_monomials_invert():
    assert (Q(2) * P("nu", 3)).inverse() == Q(1, 2) * P("nu", -3)
    with pytest.raises(NonMonomialDivisionError):
        (P("h") + 1).inverse()


def test_substitute_and_split():
    expanded = P("h", 2).substitute("h", P("nu") + 1)
    assert expanded == P("nu", 2) + 2 * P("nu") + 1

    parts = (3 * P("alpha", 2) * P("h") + P("h")).split("alpha")
    assert set(parts) == {0, 2}
    assert parts[2] == 3 * P("h")


def test_text_form_is_stable():
    assert str(ParamPoly()) == "0"
    assert str(ONE) == "1"
    assert str(-P("h")) == "-h"
