from fractions import Fraction

import pytest
from hypothesis import given, settings

from app.core.exceptions import SeriesError
from app.models.series import TruncatedSeries
from app.services.degenerate_services import degenerate_exp_series
from tests.strategies import SERIES_ORDER, invertible_series, zero_constant_series


def series(order, *coefficients):
    return TruncatedSeries.from_coefficients(coefficients, order)


def test_padding_and_truncation():
    assert series(3, 1, 2).coefficients == (1, 2, 0, 0)
    assert series(1, 1, 2, 3).coefficients == (1, 2)


def test_mul():
    assert (series(2, 1, 1) * series(2, 1, 1)).coefficients == (1, 2, 1)
    assert (series(2, 1, 1, 1) * series(2, 1, -1)).coefficients == (1, 0, 0)


def test_mul_degenerate_exponential():
    a = degenerate_exp_series(1, 1, 2)
    assert a.coefficients == (1, 1, 0)
    assert (a * a).coefficients == (1, 2, 1)


def test_order_mismatch():
    with pytest.raises(SeriesError):
        series(2, 1) * series(3, 1)


def test_reciprocal():
    assert series(3, 1, -1).reciprocal().coefficients == (1, 1, 1, 1)
    assert series(2, 1).reciprocal().coefficients == (1, 0, 0)


def test_reciprocal_of_fubini_denominator():
    # 1 - (e_1(t) - 1) = 1 - t at lambda = 1
    a = 1 - (degenerate_exp_series(1, 1, 2) - 1)
    assert a.reciprocal().egf_coefficients() == [1, 1, 2]


def test_reciprocal_needs_unit_constant():
    with pytest.raises(SeriesError):
        series(2, 0, 1).reciprocal()


def test_exp():
    assert series(2, 0).exp().coefficients == (1, 0, 0)
    assert series(3, 0, 1).exp().coefficients == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert TruncatedSeries.variable(5).exp().egf_coefficients() == [1] * 6
    shifted = degenerate_exp_series(1, 1, 2) - 1
    assert shifted.exp().egf_coefficients() == [1, 1, 1]


def test_exp_needs_zero_constant():
    with pytest.raises(SeriesError):
        series(2, 1, 1).exp()


def test_power_matches_repeated_product():
    a = series(5, 1, 2, -1, Fraction(1, 3))
    assert a**3 == a * a * a
    assert a**0 == TruncatedSeries.one(5)


def test_egf_roundtrip():
    values = [1, 1, 3, 13, 75]
    assert TruncatedSeries.from_egf(values, 4).egf_coefficients() == values


@settings(deadline=None)
@given(zero_constant_series, zero_constant_series)
def test_exp_turns_sums_into_products(a, b):
    assert (a + b).exp() == a.exp() * b.exp()


@settings(deadline=None)
@given(invertible_series)
def test_reciprocal_is_a_multiplicative_inverse(a):
    assert a.reciprocal() * a == TruncatedSeries.one(SERIES_ORDER)
    assert a * a.reciprocal() == TruncatedSeries.one(SERIES_ORDER)
