import json
import random
from fractions import Fraction

import pytest

from app.domain.exceptions import SeriesBranchError, SeriesSymbolMismatchError, TruncationError
from app.domain.model.scalars import ONE, P, Q
from app.domain.model.series import TruncatedSeries
from app.domain.services.series_ops import (
    series_compose,
    series_inverse,
    series_mul,
    series_revert,
    series_sqrt,
    series_to_json,
)


def _series(terms, order, symbol="t"):
    return TruncatedSeries.from_terms(symbol, {e: Q(*c) if isinstance(c, tuple) else Q(c) for e, c in terms.items()}, order)


def _random_series(rng, lead, order, head=None):
    terms = {e: Q(rng.randint(-9, 9), rng.randint(1, 6)) for e in range(lead, order)}
    terms[lead] = head if head is not None else Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return TruncatedSeries.from_terms("t", terms, order, lead=lead)


def test_from_terms_zero_fills_and_reports_order():
    s = _series({0: 1, 3: 2}, 5)
    assert s.lead == 0
    assert s.order == 5
    assert s.coefficient(1).is_zero()
    assert s.coefficient(3) == 2


def test_coefficient_beyond_order_raises():
    s = _series({0: 1}, 3)
    with pytest.raises(TruncationError):
        s.coefficient(3)
    with pytest.raises(TruncationError):
        s.truncated(4)


def test_product_keeps_the_smaller_precision():
    product = series_mul(_series({0: 1, 1: 1}, 3), _series({0: 1, 1: -1}, 5))
    assert product.order == 3
    # (1 + t)(1 - t) = 1 - t^2
    assert product.coefficient(0) == 1
    assert product.coefficient(1).is_zero()
    assert product.coefficient(2) == -1


def test_mixed_symbols_are_rejected():
    with pytest.raises(SeriesSymbolMismatchError):
        series_mul(_series({0: 1}, 3), _series({0: 1}, 3, symbol="nu"))


def test_inverse_of_one_minus_t_is_geometric():
    inverse = series_inverse(_series({0: 1, 1: -1}, 6))
    assert inverse.order == 6
    assert all(c == 1 for c in inverse.coeffs)


def test_inverse_shifts_the_leading_exponent():
    inverse = series_inverse(_series({2: 2, 3: 2}, 5))
    assert inverse.lead == -2
    assert inverse.coefficient(-2) == Q(1, 2)
    assert inverse.coefficient(-1) == Q(-1, 2)


def test_square_root_of_one_plus_t():
    root = series_sqrt(_series({0: 1, 1: 1}, 5), ONE)
    expected = [Fraction(1), Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128)]
    assert [c.constant_term() for c in root.coeffs] == expected
    assert series_mul(root, root) == _series({0: 1, 1: 1}, 5)


def test_square_root_respects_the_branch():
    root = series_sqrt(_series({-2: -1, 0: 1}, 4), Q(1, imag=True))
    assert root.lead == -1
    assert root.coefficient(-1) == Q(1, imag=True)


def test_square_root_rejects_a_bad_branch():
    with pytest.raises(SeriesBranchError):
        series_sqrt(_series({0: 4}, 3), Q(3))
    with pytest.raises(SeriesBranchError):
        series_sqrt(_series({1: 1}, 3), ONE)
    with pytest.raises(SeriesBranchError):
        series_sqrt(_series({0: 1}, 3), None)


def test_reversion_gives_catalan_numbers():
    # y = t + t^2  =>  t = y - y^2 + 2y^3 - 5y^4 + ...
    inverse = series_revert(_series({1: 1, 2: 1}, 5))
    assert [inverse.coefficient(e) for e in range(1, 5)] == [1, -1, 2, -5]


def test_reversion_of_a_large_variable():
    # y = 1/eps + eps  =>  eps = w + w^3 + ...  with w = 1/y
    inverse = series_revert(_series({-1: 1, 1: 1}, 4), symbol="w")
    assert inverse.symbol == "w"
    assert inverse.coefficient(1) == 1
    assert inverse.coefficient(2).is_zero()
    assert inverse.coefficient(3) == 1


def test_compose_with_a_polynomial_outer_series():
    outer = TruncatedSeries.from_terms("e", {0: ONE, 2: ONE}, 3)
    inner = TruncatedSeries.from_terms("t", {1: Q(2), 2: ONE}, 4)
    composed = series_compose(outer, inner, outer_exact=True)
    assert composed.symbol == "t"
    assert composed.coefficient(0) == 1
    assert composed.coefficient(2) == 4


def test_compose_with_non_positive_inner_needs_exact_outer():
    outer = TruncatedSeries.from_terms("e", {1: ONE}, 3)
    inner = TruncatedSeries.from_terms("t", {-1: ONE}, 2)
    with pytest.raises(TruncationError):
        series_compose(outer, inner)


def test_parameter_coefficients_survive_products():
    s = TruncatedSeries.from_terms("nu", {0: P("h"), 1: P("alpha")}, 3)
    square = series_mul(s, s)
    assert square.coefficient(1) == 2 * P("h") * P("alpha")


def test_json_form_is_sorted_and_textual():
    payload = json.loads(series_to_json(_series({0: 1, 1: (1, 2)}, 2)))
    assert payload == {"coeffs": ["1", "1/2"], "lead": 0, "order": 2, "symbol": "t"}


def test_compose_ignores_the_constant_term_when_bounding_precision():
    # (1 + e + O(e^5)) at e = t + t^2 + O(t^3) is known through t^2
    outer = _series({0: 1, 1: 1}, 5)
    inner = _series({1: 1, 2: 1}, 3)
    composed = series_compose(outer, inner)
    assert composed.order == 3
    assert [composed.coefficient(e) for e in range(3)] == [1, 1, 1]


@pytest.mark.parametrize("seed", range(6))
def test_random_products_commute_and_associate(seed):
    rng = random.Random(seed)
    leads = [rng.randint(-2, 2) for _ in range(3)]
    a, b, c = (_random_series(rng, lead, lead + 6) for lead in leads)
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


@pytest.mark.parametrize("seed", range(6))
def test_random_square_roots_recover_the_factor(seed):
    rng = random.Random(seed)
    root = _random_series(rng, 0, 7, head=ONE)
    square = series_mul(root, root)
    assert series_sqrt(square, ONE) == root
    assert series_sqrt(square.shifted(-4), ONE) == root.shifted(-2)


@pytest.mark.parametrize("seed", range(6))
def test_random_reversion_composes_to_the_identity(seed):
    rng = random.Random(seed)
    a = _random_series(rng, 1, 7)
    b = series_revert(a)
    identity = TruncatedSeries.from_terms("t", {1: ONE}, 7)
    assert series_compose(a, b) == identity
    assert series_compose(b, a) == identity
