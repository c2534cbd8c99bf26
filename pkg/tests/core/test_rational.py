from fractions import Fraction

import pytest
from hypothesis import given

from app.core.exceptions import RationalParseError
from app.core.rational import format_rational, parse_rational
from tests.strategies import nonzero_rationals, rationals


@pytest.mark.parametrize(
    "text, expected",
    [("-3/4", Fraction(-3, 4)), ("6/8", Fraction(3, 4)), (" 2 ", Fraction(2)), ("0/5", Fraction(0)), (7, Fraction(7))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["abc", "1/0", "1.5", "", "2/-3"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_parse_error_names_token():
    with pytest.raises(RationalParseError, match="'x/2'"):
        parse_rational("x/2")


def test_format_rational_lowest_terms():
    assert format_rational(Fraction(-6, 8)) == "-3/4"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a
    assert a * 1 == a
    assert a + (-a) == 0


@given(nonzero_rationals)
def test_nonzero_values_have_inverses(a):
    assert a * (1 / a) == 1


@given(rationals)
def test_canonical_text_is_lowest_terms(a):
    text = format_rational(a)
    assert parse_rational(text) == a
    assert ("/" in text) == (a.denominator != 1)
