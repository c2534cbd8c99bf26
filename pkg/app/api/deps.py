from fractions import Fraction
from typing import Annotated

from fastapi import Depends, HTTPException, Query

from app.core.exceptions import DistributionSpecError, RationalParseError
from app.core.rational import parse_rational
from app.models.distributions import MomentProvider, parse_distribution


def get_distribution(
    dist: Annotated[str, Query(description="e.g. bernoulli:2/5, gamma:3/2,2, discrete:0=1/2,1=1/2")],
) -> MomentProvider:
    try:
        return parse_distribution(dist)
    except DistributionSpecError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _rational(name: str, text: str) -> Fraction:
    try:
        return parse_rational(text)
    except RationalParseError as e:
        raise HTTPException(status_code=400, detail=f"{name}: {e}")


def get_lambda(lam: Annotated[str, Query(alias="lambda")]) -> Fraction:
    return _rational("lambda", lam)


def get_x(x: Annotated[str, Query()] = "1") -> Fraction:
    return _rational("x", x)


Distribution = Annotated[MomentProvider, Depends(get_distribution)]
Lambda = Annotated[Fraction, Depends(get_lambda)]
XPoint = Annotated[Fraction, Depends(get_x)]
