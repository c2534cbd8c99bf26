"""Moments of random variables and of their iid sums, and the probabilistic
degenerate Stirling / Bell / Fubini layer built on them."""
import logging
from contextlib import contextmanager
from fractions import Fraction
from threading import RLock
from typing import Dict, Iterator, List, Optional, Tuple

from app.core.cache import clear_caches, memoized
from app.core.exceptions import InvalidParameterError
from app.core.rational import LambdaParam
from app.models.distributions import MomentProvider
from app.models.polynomial import Polynomial
from app.models.series import TruncatedSeries
from app.services.combinatorics_services import binomial, factorial, falling_factorial_coeffs

logger = logging.getLogger(__name__)

_overlay: Dict[Tuple[MomentProvider, int], Fraction] = {}


@contextmanager
def perturbed_moment(dist: MomentProvider, m: int, delta=1) -> Iterator[None]:
    """Test hook: add ``delta`` to E[Y^m] of ``dist`` for the duration of the block."""
    key = (dist, m)
    _overlay[key] = _overlay.get(key, 0) + Fraction(delta)
    clear_caches()
    logger.debug(f"perturbed E[Y^{m}] of {dist} by {delta}")
    try:
        yield
    finally:
        _overlay[key] -= Fraction(delta)
        if _overlay[key] == 0:
            del _overlay[key]
        clear_caches()


@memoized
def raw_moment(dist: MomentProvider, m: int) -> Fraction:
    if m < 0:
        raise InvalidParameterError(f"moment order must be nonnegative, got {m}")
    return dist.raw_moment(m) + _overlay.get((dist, m), 0)


@memoized
def degenerate_moment(dist: MomentProvider, n: int, lam: LambdaParam) -> Fraction:
    """E[(Y)_{n,lam}]."""
    return sum(
        (c * raw_moment(dist, k) for k, c in enumerate(falling_factorial_coeffs(n, lam).coefficients)),
        Fraction(0),
    )


class SumMomentTable:
    """Raw moments E[S_k^m] of S_k = Y_1 + ... + Y_k, grown on demand.

    E[S_0^m] = [m = 0] and E[S_k^m] = sum_j C(m, j) E[S_{k-1}^(m-j)] E[Y^j].
    """

    def __init__(self, dist: MomentProvider, k: int, previous: Optional["SumMomentTable"]):
        self.dist = dist
        self.k = k
        self._previous = previous
        self._moments: List[Fraction] = []
        self._lock = RLock()

    def moment(self, m: int) -> Fraction:
        # Fill the predecessors bottom-up first; each _next then reads one level down only.
        pending = []
        table = self._previous
        while table is not None and not table._has(m):
            pending.append(table)
            table = table._previous
        for table in reversed(pending):
            table._extend(m)
        self._extend(m)
        return self._moments[m]

    def _has(self, m: int) -> bool:
        return len(self._moments) > m

    def _extend(self, m: int) -> None:
        with self._lock:
            while len(self._moments) <= m:
                self._moments.append(self._next(len(self._moments)))

    def _next(self, m: int) -> Fraction:
        if self.k == 0:
            return Fraction(1 if m == 0 else 0)
        return sum(
            (
                binomial(m, j) * self._previous._moments[m - j] * raw_moment(self.dist, j)
                for j in range(m + 1)
            ),
            Fraction(0),
        )


_chain_lock = RLock()


@memoized
def _moment_chain(dist: MomentProvider) -> List[SumMomentTable]:
    return [SumMomentTable(dist, 0, None)]


def sum_moment_table(dist: MomentProvider, k: int) -> SumMomentTable:
    if k < 0:
        raise InvalidParameterError(f"number of summands must be nonnegative, got {k}")
    chain = _moment_chain(dist)
    with _chain_lock:
        while len(chain) <= k:
            chain.append(SumMomentTable(dist, len(chain), chain[-1]))
        return chain[k]


def sum_raw_moment(dist: MomentProvider, k: int, m: int) -> Fraction:
    if m < 0:
        raise InvalidParameterError(f"moment order must be nonnegative, got {m}")
    return sum_moment_table(dist, k).moment(m)


@memoized
def sum_degenerate_moment(dist: MomentProvider, k: int, n: int, lam: LambdaParam) -> Fraction:
    """E[(S_k)_{n,lam}] from the raw moments of S_k."""
    return sum(
        (c * sum_raw_moment(dist, k, m) for m, c in enumerate(falling_factorial_coeffs(n, lam).coefficients)),
        Fraction(0),
    )


@memoized
def prob_stirling2(dist: MomentProvider, n: int, k: int, lam: LambdaParam) -> Fraction:
    """{n brace k}_{Y,lam} as the alternating binomial transform of E[(S_j)_{n,lam}].

    Zero for k > n.
    """
    if n < 0 or k < 0:
        raise InvalidParameterError(f"probabilistic stirling2 needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    total = sum(
        (
            binomial(k, j) * (-1) ** (k - j) * sum_degenerate_moment(dist, j, n, lam)
            for j in range(k + 1)
        ),
        Fraction(0),
    )
    return total / factorial(k)


@memoized
def prob_bell_poly(dist: MomentProvider, n: int, lam: LambdaParam) -> Polynomial:
    return Polynomial(prob_stirling2(dist, n, k, lam) for k in range(n + 1))


@memoized
def prob_fubini_poly(dist: MomentProvider, n: int, lam: LambdaParam) -> Polynomial:
    return Polynomial(prob_stirling2(dist, n, k, lam) * factorial(k) for k in range(n + 1))


@memoized
def prob_fubini_poly_order(dist: MomentProvider, n: int, r: int, lam: LambdaParam) -> Polynomial:
    if r < 1:
        raise InvalidParameterError(f"order r must be >= 1, got {r}")
    return Polynomial(
        binomial(r + i - 1, i) * factorial(i) * prob_stirling2(dist, n, i, lam) for i in range(n + 1)
    )


def mgf_degenerate_series(dist: MomentProvider, lam: LambdaParam, order: int) -> TruncatedSeries:
    """E[e_lam^Y(t)] truncated at t^order."""
    if order < 0:
        raise InvalidParameterError(f"series order must be nonnegative, got {order}")
    return TruncatedSeries.from_egf((degenerate_moment(dist, n, lam) for n in range(order + 1)), order)


def fubini_generating_series(dist: MomentProvider, lam: LambdaParam, x: Fraction, order: int) -> TruncatedSeries:
    """1 / (1 - x (E[e_lam^Y(t)] - 1)) truncated at t^order."""
    return (1 - (mgf_degenerate_series(dist, lam, order) - 1) * x).reciprocal()
