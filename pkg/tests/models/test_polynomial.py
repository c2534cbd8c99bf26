import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import InvalidParameterError
from app.models.polynomial import Polynomial, gamma_weight_integral
from tests.strategies import polynomials, rationals


def poly(*coefficients):
    return Polynomial(tuple(Fraction(c) for c in coefficients))


def test_trailing_zeros_are_dropped():
    assert poly(1, 0, 0) == poly(1)
    assert poly(0, 0).coefficients == ()
    assert Polynomial().degree == float("-inf")


@pytest.mark.parametrize(
    "p, x, expected",
    [
        (Polynomial(), Fraction(7, 2), 0),
        (poly(0, 1, 2), 1, 3),
        (poly(0, Fraction(1, 2), 2), 1, Fraction(5, 2)),
    ],
)
def test_evaluate(p, x, expected):
    assert p.evaluate(x) == expected
    assert p(x) == expected


@pytest.mark.parametrize(
    "p, r, expected",
    [
        (poly(0, 1, 2), 1, poly(1, 4)),
        (poly(5), 3, Polynomial()),
        (poly(0, 0, 0, 1), 2, poly(0, 6)),
        (poly(3, 1), 0, poly(3, 1)),
    ],
)
def test_derivative(p, r, expected):
    assert p.derivative(r) == expected


def test_derivative_rejects_negative_order():
    with pytest.raises(InvalidParameterError):
        poly(1, 1).derivative(-1)


def test_arithmetic():
    p, q = poly(1, 1), poly(-1, 1)
    assert p * q == poly(-1, 0, 1)
    assert p + q == poly(0, 2)
    assert p - p == Polynomial()
    assert 2 * p == poly(2, 2)
    assert p * Fraction(1, 2) == poly(Fraction(1, 2), Fraction(1, 2))


def test_scale_variable():
    assert poly(1, 1, 1).scale_variable(Fraction(2, 5)) == poly(1, Fraction(2, 5), Fraction(4, 25))


@pytest.mark.parametrize(
    "p, r, expected",
    [(poly(0, 0, 1), 1, 2), (poly(1), 2, 1), (poly(0, 1), 3, 6)],
)
def test_gamma_weight_integral(p, r, expected):
    assert gamma_weight_integral(p, r) == expected


def test_gamma_weight_integral_needs_positive_r():
    with pytest.raises(InvalidParameterError):
        gamma_weight_integral(poly(1), 0)


def test_to_strings():
    assert poly(0, Fraction(1, 5), Fraction(8, 25)).to_strings() == ["0", "1/5", "8/25"]


@pytest.mark.parametrize("k", range(21))
def test_gamma_weight_integral_of_monomials(k):
    assert gamma_weight_integral(Polynomial.monomial(k), 1) == math.factorial(k)


@given(polynomials, st.integers(0, 4), st.integers(0, 4))
def test_derivatives_compose(p, r, s):
    assert p.derivative(r).derivative(s) == p.derivative(r + s)


@given(polynomials, polynomials, polynomials)
def test_ring_axioms(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p - p == Polynomial()


@given(polynomials, polynomials, rationals)
def test_evaluation_respects_sums_and_products(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
