"""Row builders behind the ``table``, ``series`` and ``partial-sum`` commands."""
from fractions import Fraction
from typing import List, Optional

from app.core.exceptions import InvalidParameterError
from app.core.rational import LambdaParam
from app.models.distributions import MomentProvider
from app.schemas.tables import PartialSum, SeriesRow, TableRow
from app.services.probabilistic_services import (
    fubini_generating_series,
    prob_fubini_poly,
    prob_fubini_poly_order,
    sum_degenerate_moment,
)


def table_rows(dist: MomentProvider, lam: LambdaParam, n_max: int, r: Optional[int] = None) -> List[TableRow]:
    """Coefficient vectors of F^Y_{n,lam} (or its order-r version) for n = 0..n_max."""
    if n_max < 0:
        raise InvalidParameterError(f"n-max must be nonnegative, got {n_max}")
    rows = []
    for n in range(n_max + 1):
        poly = prob_fubini_poly(dist, n, lam) if r is None else prob_fubini_poly_order(dist, n, r, lam)
        rows.append(TableRow(n=n, coefficients=poly.to_strings() or ["0"], value_at_1=poly(1)))
    return rows


def series_rows(dist: MomentProvider, lam: LambdaParam, order: int, x: Fraction = Fraction(1)) -> List[SeriesRow]:
    series = fubini_generating_series(dist, lam, x, order)
    return [SeriesRow(n=n, coefficient=c) for n, c in enumerate(series.egf_coefficients())]


def partial_sum(dist: MomentProvider, lam: LambdaParam, n: int, x: Fraction, terms: int) -> PartialSum:
    """Truncation of F^Y_{n,lam}(x) = 1/(1+x) sum_k (x/(1+x))^k E[(S_k)_{n,lam}]."""
    if n < 0:
        raise InvalidParameterError(f"n must be nonnegative, got {n}")
    if terms < 1:
        raise InvalidParameterError(f"terms must be positive, got {terms}")
    if x == -1:
        raise InvalidParameterError("x = -1 makes 1/(1+x) undefined")
    ratio = x / (1 + x)
    if abs(ratio) > Fraction(1, 2):
        raise InvalidParameterError(f"need |x/(1+x)| <= 1/2 for the sum to converge usefully, got {ratio}")
    truncated = sum(
        (ratio**k * sum_degenerate_moment(dist, k, n, lam) for k in range(terms)), Fraction(0)
    ) / (1 + x)
    exact = prob_fubini_poly(dist, n, lam)(x)
    return PartialSum(
        n=n,
        x=x,
        terms=terms,
        exact=exact,
        truncated=truncated,
        truncated_float=float(truncated),
        gap=abs(float(exact - truncated)),
    )
