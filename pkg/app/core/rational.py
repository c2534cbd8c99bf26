"""Exact rational scalars and their wire format.

Every scalar in the project is a ``fractions.Fraction``: always in lowest terms,
denominator positive, zero stored as 0/1. On the wire a rational is the string
``"p/q"`` (or ``"n"`` for integers); JSON numbers are never used for exact values.
"""
import re
from fractions import Fraction
from typing import Annotated, Any, Union

from pydantic import BeforeValidator, PlainSerializer, WithJsonSchema

from app.core.exceptions import RationalParseError

Rational = Fraction
LambdaParam = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise RationalParseError(f"not a rational: '{text}'")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise RationalParseError(f"zero denominator: '{text}'")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _coerce(value: Any) -> Fraction:
    try:
        return parse_rational(value)
    except RationalParseError as e:
        raise ValueError(str(e)) from e


RationalField = Annotated[
    Fraction,
    BeforeValidator(_coerce),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^[+-]?\d+(/\d+)?$", "examples": ["-3/4", "2"]}),
]
