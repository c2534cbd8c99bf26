from typing import List

from pydantic import BaseModel

from app.core.rational import RationalField


class TableRow(BaseModel):
    n: int
    coefficients: List[str]
    value_at_1: RationalField


class SeriesRow(BaseModel):
    n: int
    coefficient: RationalField


class PartialSum(BaseModel):
    n: int
    x: RationalField
    terms: int
    exact: RationalField
    truncated: RationalField
    truncated_float: float
    gap: float
