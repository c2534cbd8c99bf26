"""Exact tables of classical and degenerate combinatorial numbers.

Classical tables live in a single ``CombCache`` that grows row by row and never
rewrites an entry. A test-only overlay (``perturbed_entry``) can shift one entry
by a delta without touching the tables themselves.
"""
import logging
import math
from contextlib import contextmanager
from fractions import Fraction
from threading import RLock
from typing import Dict, Iterator, List, Sequence, Tuple

from app.core.cache import clear_caches, memoized
from app.core.exceptions import InvalidParameterError
from app.core.rational import LambdaParam
from app.models.polynomial import Polynomial

logger = logging.getLogger(__name__)

TABLES = ("binomial", "stirling1", "stirling2", "lah")


class CombCache:
    """Monotone memo tables for factorials, Pascal rows, S1, S2 and Lah numbers."""

    def __init__(self):
        self._lock = RLock()
        self.factorials: List[int] = [1]
        self.pascal: List[List[int]] = [[1]]
        self.stirling1: List[List[int]] = [[1]]
        self.stirling2: List[List[int]] = [[1]]
        self.lah: Dict[Tuple[int, int], int] = {}

    @property
    def max_n(self) -> int:
        return len(self.pascal) - 1

    def grow(self, n: int) -> None:
        with self._lock:
            while self.max_n < n:
                m = self.max_n + 1
                self.factorials.append(self.factorials[-1] * m)
                prev = self.pascal[-1]
                self.pascal.append([1] + [prev[k - 1] + prev[k] for k in range(1, m)] + [1])
                # s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
                prev = self.stirling1[-1] + [0]
                self.stirling1.append(
                    [0] + [prev[k - 1] - (m - 1) * prev[k] for k in range(1, m + 1)]
                )
                # S(m, k) = k S(m-1, k) + S(m-1, k-1)
                prev = self.stirling2[-1] + [0]
                self.stirling2.append(
                    [0] + [k * prev[k] + prev[k - 1] for k in range(1, m + 1)]
                )

    def lah_number(self, n: int, k: int) -> int:
        with self._lock:
            if (n, k) not in self.lah:
                if n == 0 and k == 0:
                    value = 1
                elif k == 0 or k > n:
                    value = 0
                else:
                    self.grow(n)
                    value = self.factorials[n] // self.factorials[k] * self.pascal[n - 1][k - 1]
                self.lah[(n, k)] = value
            return self.lah[(n, k)]


comb_cache = CombCache()

_overlay: Dict[Tuple[str, int, int], Fraction] = {}


def _shift(table: str, n: int, k: int, value) -> Fraction:
    return Fraction(value) + _overlay.get((table, n, k), 0)


@contextmanager
def perturbed_entry(table: str, n: int, k: int, delta=1) -> Iterator[None]:
    """Test hook: add ``delta`` to one table entry for the duration of the block."""
    if table not in TABLES:
        raise InvalidParameterError(f"unknown table '{table}', expected one of {TABLES}")
    key = (table, n, k)
    _overlay[key] = _overlay.get(key, 0) + Fraction(delta)
    clear_caches()
    logger.debug(f"perturbed {table}({n},{k}) by {delta}")
    try:
        yield
    finally:
        _overlay[key] -= Fraction(delta)
        if _overlay[key] == 0:
            del _overlay[key]
        clear_caches()


def factorial(n: int) -> int:
    if n < 0:
        raise InvalidParameterError(f"factorial of negative {n}")
    comb_cache.grow(n)
    return comb_cache.factorials[n]


def binomial(n: int, k: int) -> Fraction:
    """C(n, k), with the generalized falling-product form for negative n.

    Zero when k < 0 (for any n) or when k > n >= 0.
    """
    if k < 0:
        value = 0
    elif n >= 0:
        if k > n:
            value = 0
        else:
            comb_cache.grow(n)
            value = comb_cache.pascal[n][k]
    else:
        value = Fraction(math.prod(range(n - k + 1, n + 1)), math.factorial(k))
    return _shift("binomial", n, k, value)


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind."""
    if n < 0 or k < 0:
        raise InvalidParameterError(f"stirling1 needs n, k >= 0, got ({n}, {k})")
    value = 0
    if k <= n:
        comb_cache.grow(n)
        value = comb_cache.stirling1[n][k]
    return _shift("stirling1", n, k, value)


def stirling2_classical(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise InvalidParameterError(f"stirling2 needs n, k >= 0, got ({n}, {k})")
    value = 0
    if k <= n:
        comb_cache.grow(n)
        value = comb_cache.stirling2[n][k]
    return _shift("stirling2", n, k, value)


def lah(n: int, k: int) -> Fraction:
    """Unsigned Lah number n!/k! C(n-1, k-1); L(0,0) = 1, L(n,0) = 0 for n >= 1."""
    if n < 0 or k < 0:
        raise InvalidParameterError(f"lah needs n, k >= 0, got ({n}, {k})")
    return _shift("lah", n, k, comb_cache.lah_number(n, k))


@memoized
def falling_factorial_coeffs(n: int, lam: LambdaParam) -> Polynomial:
    """(y)_{n,lam} = y (y - lam) ... (y - (n-1) lam) expanded in powers of y."""
    if n < 0:
        raise InvalidParameterError(f"falling factorial needs n >= 0, got {n}")
    result = Polynomial.constant(1)
    for j in range(n):
        result = result * Polynomial((-j * Fraction(lam), 1))
    return result


@memoized
def stirling2_degenerate(n: int, k: int, lam: LambdaParam) -> Fraction:
    """{n brace k}_lam = sum_m lam^(n-m) S1(n, m) S2(m, k).

    Expands (x)_{n,lam} into monomials, then monomials into falling factorials.
    """
    if n < 0 or k < 0:
        raise InvalidParameterError(f"degenerate stirling2 needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    lam = Fraction(lam)
    return sum(
        (lam ** (n - m) * stirling1(n, m) * stirling2_classical(m, k) for m in range(k, n + 1)),
        Fraction(0),
    )


def _multiplicities(n: int, k: int, largest: int) -> Iterator[Dict[int, int]]:
    """Partitions of n into exactly k parts, each at most ``largest``, as part -> count."""
    if k == 0:
        if n == 0:
            yield {}
        return
    for part in range(min(largest, n - k + 1), 0, -1):
        if part * k < n:
            break
        for count in range(1, k + 1):
            if part * count > n:
                break
            for rest in _multiplicities(n - part * count, k - count, part - 1):
                yield {part: count, **rest}


def partial_bell(n: int, k: int, x: Sequence[Fraction]) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).

    Sums n! prod_j (x_j / j!)^(l_j) / l_j! over all (l_j) with sum l_j = k and
    sum j l_j = n.
    """
    if not 0 <= k <= n:
        raise InvalidParameterError(f"partial Bell needs 0 <= k <= n, got ({n}, {k})")
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    if len(x) < n - k + 1:
        raise InvalidParameterError(
            f"partial Bell B_({n},{k}) needs {n - k + 1} arguments, got {len(x)}"
        )
    total = Fraction(0)
    for multiplicity in _multiplicities(n, k, n - k + 1):
        term = Fraction(factorial(n))
        for j, count in multiplicity.items():
            term *= (Fraction(x[j - 1]) / factorial(j)) ** count / factorial(count)
        total += term
    return total


def falling_factorial_int(x: int, k: int) -> int:
    """Classical (x)_k for integer x."""
    return math.prod(range(x - k + 1, x + 1)) if k > 0 else 1
