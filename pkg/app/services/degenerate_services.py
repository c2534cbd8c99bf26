"""Non-probabilistic families: degenerate exponential, Bell and Fubini polynomials."""
from fractions import Fraction
from typing import List

from app.core.cache import memoized
from app.core.exceptions import InvalidParameterError
from app.core.rational import LambdaParam
from app.models.polynomial import Polynomial
from app.models.series import TruncatedSeries
from app.services.combinatorics_services import (
    binomial,
    factorial,
    falling_factorial_coeffs,
    stirling2_classical,
    stirling2_degenerate,
)


def degenerate_exp_series(x: Fraction, lam: LambdaParam, order: int) -> TruncatedSeries:
    """e_lam^x(t) truncated at t^order; the t^k/k! coefficient is (x)_{k,lam}."""
    if order < 0:
        raise InvalidParameterError(f"series order must be nonnegative, got {order}")
    return TruncatedSeries.from_egf(
        (falling_factorial_coeffs(k, lam).evaluate(x) for k in range(order + 1)), order
    )


@memoized
def bell_poly_degenerate(n: int, lam: LambdaParam) -> Polynomial:
    return Polynomial(stirling2_degenerate(n, k, lam) for k in range(n + 1))


@memoized
def fubini_poly_degenerate(n: int, lam: LambdaParam) -> Polynomial:
    return Polynomial(stirling2_degenerate(n, k, lam) * factorial(k) for k in range(n + 1))


@memoized
def fubini_poly_classical(n: int) -> Polynomial:
    return Polynomial(stirling2_classical(n, k) * factorial(k) for k in range(n + 1))


@memoized
def fubini_poly_degenerate_order(n: int, r: int, lam: LambdaParam) -> Polynomial:
    if r < 1:
        raise InvalidParameterError(f"order r must be >= 1, got {r}")
    return Polynomial(
        binomial(k + r - 1, k) * stirling2_degenerate(n, k, lam) * factorial(k)
        for k in range(n + 1)
    )


def geometric_substitution(p: Polynomial, r: int, depth: int) -> List[Fraction]:
    """x^k coefficients, k = 0..depth, of (1/(1-x))^(r+1) p(x/(1-x)).

    Uses x^j (1-x)^-(j+r+1) = sum_k C(k+r, k-j) x^k, so the expansion is exact.
    """
    if r < 0:
        raise InvalidParameterError(f"shift r must be nonnegative, got {r}")
    return [
        sum(
            (c * binomial(k + r, k - j) for j, c in enumerate(p.coefficients) if j <= k),
            Fraction(0),
        )
        for k in range(depth + 1)
    ]
