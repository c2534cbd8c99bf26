"""Exact checkers for the identity suite.

Each checker walks the configured grid, computes both sides of one identity
with the library and hands them to ``CaseLog.check``. The first mismatch stops
the checker and becomes the report's counterexample.
"""
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

from app.core.config import settings
from app.core.exceptions import UnknownIdentityError
from app.core.rational import LambdaParam, format_rational
from app.models.distributions import Bernoulli, Distribution, Gamma, MomentProvider, Poisson
from app.models.enums import CheckStatus, IdentityId
from app.models.polynomial import Polynomial, gamma_weight_integral
from app.models.series import TruncatedSeries
from app.schemas.checks import CheckConfig, CheckReport, Counterexample
from app.services.combinatorics_services import (
    binomial,
    factorial,
    falling_factorial_coeffs,
    falling_factorial_int,
    lah,
    partial_bell,
    stirling1,
    stirling2_degenerate,
)
from app.services.degenerate_services import (
    bell_poly_degenerate,
    degenerate_exp_series,
    fubini_poly_classical,
    fubini_poly_degenerate,
    fubini_poly_degenerate_order,
    geometric_substitution,
)
from app.services.probabilistic_services import (
    degenerate_moment,
    fubini_generating_series,
    mgf_degenerate_series,
    prob_bell_poly,
    prob_fubini_poly,
    prob_fubini_poly_order,
    prob_stirling2,
    sum_degenerate_moment,
)

logger = logging.getLogger(__name__)

Value = Union[Polynomial, Fraction, int]

# Identities whose printed form is known not to hold in general.
EXPECTED_DISCREPANCIES = frozenset({IdentityId.THM2_9_PRINTED})


class _Mismatch(Exception):
    def __init__(self, counterexample: Counterexample):
        super().__init__(counterexample.params)
        self.counterexample = counterexample


def _as_polynomial(value: Value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def _param(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


class CaseLog:
    """Counts compared cases and stops at the first unequal pair."""

    def __init__(self):
        self.cases = 0

    def check(self, params: Dict[str, object], lhs: Value, rhs: Value) -> None:
        self.cases += 1
        left, right = _as_polynomial(lhs), _as_polynomial(rhs)
        if left != right:
            raise _Mismatch(
                Counterexample(
                    params={name: _param(v) for name, v in params.items()},
                    lhs=left.to_strings() or ["0"],
                    rhs=right.to_strings() or ["0"],
                )
            )


Checker = Callable[[CheckConfig, CaseLog], None]
_CHECKERS: Dict[IdentityId, Checker] = {}


def checker(identity: IdentityId) -> Callable[[Checker], Checker]:
    def register(fn: Checker) -> Checker:
        _CHECKERS[identity] = fn
        return fn

    return register


def _x_series(cfg: CheckConfig) -> Iterable:
    return product(cfg.lambdas, cfg.x_points)


def _dist_lambda(cfg: CheckConfig) -> Iterable:
    return product(cfg.dists, cfg.lambdas)


def _x_polynomial() -> Polynomial:
    return Polynomial.monomial(1)


def _moment_args(dist: Distribution, n: int, lam: Fraction) -> List[Fraction]:
    return [degenerate_moment(dist, i, lam) for i in range(1, n + 1)]


def _weighted_integral(p: Polynomial, r: int) -> Polynomial:
    """Apply the Gamma(r, 1) weight to each coefficient of p separately."""
    return Polynomial(
        gamma_weight_integral(Polynomial.monomial(k, c), r) / factorial(r - 1)
        for k, c in enumerate(p.coefficients)
    )


# --- degenerate, non-probabilistic ------------------------------------------


@checker(IdentityId.EQ6)
def _falling_factorial_expansion(cfg: CheckConfig, log: CaseLog) -> None:
    for lam in cfg.lambdas:
        for n in range(cfg.n_max + 1):
            falling = falling_factorial_coeffs(n, lam)
            for x in range(n + 1):
                rhs = sum(
                    (stirling2_degenerate(n, k, lam) * falling_factorial_int(x, k) for k in range(n + 1)),
                    Fraction(0),
                )
                log.check({"lambda": lam, "n": n, "x": x}, falling(x), rhs)


@checker(IdentityId.EQ10_GF)
def _fubini_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    order = cfg.series_order
    for lam, x in _x_series(cfg):
        series = (1 - (degenerate_exp_series(1, lam, order) - 1) * x).reciprocal()
        for n, value in enumerate(series.egf_coefficients()):
            log.check({"lambda": lam, "x": x, "n": n}, value, fubini_poly_degenerate(n, lam)(x))


@checker(IdentityId.EQ11)
def _fubini_geometric_series(cfg: CheckConfig, log: CaseLog) -> None:
    for lam in cfg.lambdas:
        for n in range(cfg.n_max + 1):
            coefficients = geometric_substitution(fubini_poly_degenerate(n, lam), 0, cfg.depth)
            falling = falling_factorial_coeffs(n, lam)
            for k, value in enumerate(coefficients):
                log.check({"lambda": lam, "n": n, "k": k}, value, falling(k))


@checker(IdentityId.EQ12_GF)
def _higher_order_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    order = cfg.series_order
    for lam, x in _x_series(cfg):
        base = (1 - (degenerate_exp_series(1, lam, order) - 1) * x).reciprocal()
        for r in range(1, cfg.r_max + 1):
            for n, value in enumerate((base**r).egf_coefficients()):
                log.check(
                    {"lambda": lam, "x": x, "r": r, "n": n},
                    value,
                    fubini_poly_degenerate_order(n, r, lam)(x),
                )


@checker(IdentityId.EQ14)
def _higher_order_geometric_series(cfg: CheckConfig, log: CaseLog) -> None:
    for lam, n in product(cfg.lambdas, range(cfg.n_max + 1)):
        falling = falling_factorial_coeffs(n, lam)
        for r in range(cfg.r_max + 1):
            coefficients = geometric_substitution(fubini_poly_degenerate_order(n, r + 1, lam), r, cfg.depth)
            for k, value in enumerate(coefficients):
                log.check({"lambda": lam, "n": n, "r": r, "k": k}, value, binomial(k + r, r) * falling(k))


@checker(IdentityId.EQ15_GF)
def _partial_bell_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    rng = random.Random(cfg.seed)
    n_max = cfg.n_max
    for trial in range(3):
        xs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n_max)]
        inner = TruncatedSeries.from_egf([0] + xs, n_max)
        for k in range(min(5, n_max) + 1):
            values = (inner**k * Fraction(1, factorial(k))).egf_coefficients()
            for n in range(k, n_max + 1):
                log.check({"trial": trial, "k": k, "n": n}, values[n], partial_bell(n, k, xs))


# --- probabilistic -----------------------------------------------------------


@checker(IdentityId.EQ19_INV)
def _sum_moment_inversion(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n, k in product(range(cfg.n_max + 1), repeat=2):
            rhs = sum(
                (binomial(k, j) * factorial(j) * prob_stirling2(dist, n, j, lam) for j in range(k + 1)),
                Fraction(0),
            )
            log.check({"dist": dist, "lambda": lam, "n": n, "k": k}, sum_degenerate_moment(dist, k, n, lam), rhs)


@checker(IdentityId.EQ20_GF)
def _prob_stirling_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    order = cfg.series_order
    for dist, lam in _dist_lambda(cfg):
        shifted = mgf_degenerate_series(dist, lam, order) - 1
        power = TruncatedSeries.one(order)
        for k in range(cfg.n_max + 1):
            if k:
                power = power * shifted
            values = (power * Fraction(1, factorial(k))).egf_coefficients()
            for n, value in enumerate(values):
                log.check({"dist": dist, "lambda": lam, "k": k, "n": n}, value, prob_stirling2(dist, n, k, lam))


@checker(IdentityId.EQ22_GF)
def _prob_bell_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    order = cfg.series_order
    for dist, lam in _dist_lambda(cfg):
        shifted = mgf_degenerate_series(dist, lam, order) - 1
        for x in cfg.x_points:
            for n, value in enumerate((shifted * x).exp().egf_coefficients()):
                log.check({"dist": dist, "lambda": lam, "x": x, "n": n}, value, prob_bell_poly(dist, n, lam)(x))


@checker(IdentityId.EQ23_GF)
def _prob_fubini_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for x in cfg.x_points:
            series = fubini_generating_series(dist, lam, x, cfg.series_order)
            for n, value in enumerate(series.egf_coefficients()):
                log.check({"dist": dist, "lambda": lam, "x": x, "n": n}, value, prob_fubini_poly(dist, n, lam)(x))


@checker(IdentityId.EQ29_BELL)
def _prob_stirling_as_partial_bell(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n in range(cfg.n_max + 1):
            args = _moment_args(dist, n, lam)
            for k in range(n + 1):
                log.check(
                    {"dist": dist, "lambda": lam, "n": n, "k": k},
                    prob_stirling2(dist, n, k, lam),
                    partial_bell(n, k, args),
                )


@checker(IdentityId.THM2_1)
def _geometric_expansion(cfg: CheckConfig, log: CaseLog) -> None:
    order = cfg.series_order
    for dist, lam in _dist_lambda(cfg):
        shifted = mgf_degenerate_series(dist, lam, order) - 1
        for x in cfg.x_points:
            term = TruncatedSeries.one(order)
            total = term
            # (shifted * x)^k starts at t^k, so order + 1 terms are exact
            for _ in range(order):
                term = term * shifted * x
                total = total + term
            for n, value in enumerate(total.egf_coefficients()):
                log.check({"dist": dist, "lambda": lam, "x": x, "n": n}, value, prob_fubini_poly(dist, n, lam)(x))
        for n in range(cfg.n_max + 1):
            log.check(
                {"dist": dist, "lambda": lam, "n": n, "r": 1},
                prob_fubini_poly(dist, n, lam),
                prob_fubini_poly_order(dist, n, 1, lam),
            )


@checker(IdentityId.THM2_2)
def _sum_moment_differences(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n in range(cfg.n_max + 1):
            f = prob_fubini_poly(dist, n, lam).coefficients
            moments = [sum_degenerate_moment(dist, i, n, lam) for i in range(cfg.depth + 1)]
            for i, moment in enumerate(moments):
                # u^i coefficient of F(u / (1 - u))
                lhs = sum(
                    (c * binomial(i - 1, j - 1) for j, c in enumerate(f) if 1 <= j <= i),
                    Fraction(0),
                )
                if i == 0 and f:
                    lhs += f[0]
                rhs = moment - (moments[i - 1] if i else 0)
                log.check({"dist": dist, "lambda": lam, "n": n, "i": i}, lhs, rhs)


@checker(IdentityId.THM2_3)
def _gamma_lah_formula(cfg: CheckConfig, log: CaseLog) -> None:
    exponentials = [d for d in cfg.dists if isinstance(d, Gamma) and d.alpha == 1 and d.beta == 1]
    for dist, lam in product(exponentials, cfg.lambdas):
        for n in range(cfg.n_max + 1):
            rhs = Polynomial(
                sum(
                    (factorial(k) * lam ** (n - l) * lah(l, k) * stirling1(n, l) for l in range(k, n + 1)),
                    Fraction(0),
                )
                for k in range(n + 1)
            )
            log.check({"dist": dist, "lambda": lam, "n": n}, prob_fubini_poly(dist, n, lam), rhs)


@checker(IdentityId.THM2_4)
def _bell_gamma_integral(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n in range(cfg.n_max + 1):
            log.check(
                {"dist": dist, "lambda": lam, "n": n},
                prob_fubini_poly(dist, n, lam),
                _weighted_integral(prob_bell_poly(dist, n, lam), 1),
            )


@checker(IdentityId.THM2_5)
def _fubini_at_one(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n in range(cfg.n_max + 1):
            args = _moment_args(dist, n, lam)
            rhs = sum((factorial(k) * partial_bell(n, k, args) for k in range(n + 1)), Fraction(0))
            log.check({"dist": dist, "lambda": lam, "n": n}, prob_fubini_poly(dist, n, lam)(1), rhs)


@checker(IdentityId.THM2_6)
def _higher_order_prob_generating_function(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for x in cfg.x_points:
            base = fubini_generating_series(dist, lam, x, cfg.series_order)
            for r in range(1, cfg.r_max + 1):
                for n, value in enumerate((base**r).egf_coefficients()):
                    log.check(
                        {"dist": dist, "lambda": lam, "x": x, "r": r, "n": n},
                        value,
                        prob_fubini_poly_order(dist, n, r, lam)(x),
                    )


@checker(IdentityId.THM2_7)
def _fubini_recurrence(cfg: CheckConfig, log: CaseLog) -> None:
    x = _x_polynomial()
    for dist, lam in _dist_lambda(cfg):
        for n in range(1, cfg.n_max + 1):
            inner = sum(
                (
                    prob_fubini_poly(dist, n - k, lam) * (binomial(n, k) * degenerate_moment(dist, k, lam))
                    for k in range(1, n + 1)
                ),
                Polynomial(),
            )
            log.check({"dist": dist, "lambda": lam, "n": n}, prob_fubini_poly(dist, n, lam), x * inner)


@checker(IdentityId.THM2_8)
def _fubini_quadratic_recurrence(cfg: CheckConfig, log: CaseLog) -> None:
    x = _x_polynomial()
    for dist, lam in _dist_lambda(cfg):
        fubini = [prob_fubini_poly(dist, i, lam) for i in range(cfg.n_max + 1)]
        squares = [
            sum((fubini[i] * fubini[k - i] * binomial(k, i) for i in range(k + 1)), Polynomial())
            for k in range(cfg.n_max)
        ]
        for n in range(cfg.n_max):
            inner = sum(
                (squares[k] * (binomial(n, k) * degenerate_moment(dist, n - k + 1, lam)) for k in range(n + 1)),
                Polynomial(),
            )
            log.check({"dist": dist, "lambda": lam, "n": n}, fubini[n + 1], x * inner)


def printed_derivative_rhs(dist: MomentProvider, n: int, r: int, lam: LambdaParam) -> Polynomial:
    """r! sum_i C(n, i) F^{(r+1)}_i(x) E[(S_r)_{n-i,lam}], exactly as the derivative formula is printed."""
    return sum(
        (
            prob_fubini_poly_order(dist, i, r + 1, lam)
            * (binomial(n, i) * sum_degenerate_moment(dist, r, n - i, lam))
            for i in range(n + 1)
        ),
        Polynomial(),
    ) * factorial(r)


@checker(IdentityId.THM2_9_PRINTED)
def _derivative_printed(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n, r in product(range(1, cfg.n_max + 1), range(1, cfg.r_max + 1)):
            log.check(
                {"dist": dist, "lambda": lam, "n": n, "r": r},
                prob_fubini_poly(dist, n, lam).derivative(r),
                printed_derivative_rhs(dist, n, r, lam),
            )


@checker(IdentityId.THM2_9_CORRECTED)
def _derivative_corrected(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n, r in product(range(cfg.n_max + 1), range(cfg.r_max + 1)):
            rhs = sum(
                (
                    prob_fubini_poly_order(dist, i, r + 1, lam)
                    * (binomial(n, i) * prob_stirling2(dist, n - i, r, lam))
                    for i in range(n + 1)
                ),
                Polynomial(),
            ) * factorial(r) ** 2
            log.check(
                {"dist": dist, "lambda": lam, "n": n, "r": r},
                prob_fubini_poly(dist, n, lam).derivative(r),
                rhs,
            )


@checker(IdentityId.THM2_10)
def _prob_fubini_geometric_series(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n in range(cfg.n_max + 1):
            coefficients = geometric_substitution(prob_fubini_poly(dist, n, lam), 0, cfg.depth)
            for i, value in enumerate(coefficients):
                log.check(
                    {"dist": dist, "lambda": lam, "n": n, "i": i}, value, sum_degenerate_moment(dist, i, n, lam)
                )


def _poissons(cfg: CheckConfig) -> List[Poisson]:
    return [d for d in cfg.dists if isinstance(d, Poisson)]


@checker(IdentityId.THM2_11)
def _poisson_classical_fubini(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in product(_poissons(cfg), cfg.lambdas):
        for n in range(cfg.n_max + 1):
            rhs = sum(
                (
                    fubini_poly_classical(i) * (stirling2_degenerate(n, i, lam) * dist.alpha**i)
                    for i in range(n + 1)
                ),
                Polynomial(),
            )
            log.check({"dist": dist, "lambda": lam, "n": n}, prob_fubini_poly(dist, n, lam), rhs)


@checker(IdentityId.THM2_12)
def _poisson_bell_values(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in product(_poissons(cfg), cfg.lambdas):
        for n in range(cfg.n_max + 1):
            bell = bell_poly_degenerate(n, lam)
            coefficients = geometric_substitution(prob_fubini_poly(dist, n, lam), 0, cfg.depth)
            for k, value in enumerate(coefficients):
                expected = bell(k * dist.alpha)
                params = {"dist": dist, "lambda": lam, "n": n, "k": k}
                log.check({**params, "side": "moment"}, sum_degenerate_moment(dist, k, n, lam), expected)
                log.check({**params, "side": "series"}, value, expected)


@checker(IdentityId.THM2_13)
def _higher_order_prob_geometric_series(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n, r in product(range(cfg.n_max + 1), range(cfg.r_max + 1)):
            coefficients = geometric_substitution(prob_fubini_poly_order(dist, n, r + 1, lam), r, cfg.depth)
            for k, value in enumerate(coefficients):
                log.check(
                    {"dist": dist, "lambda": lam, "n": n, "r": r, "k": k},
                    value,
                    binomial(k + r, k) * sum_degenerate_moment(dist, k, n, lam),
                )


@checker(IdentityId.THM2_14)
def _higher_order_gamma_integral(cfg: CheckConfig, log: CaseLog) -> None:
    for dist, lam in _dist_lambda(cfg):
        for n, r in product(range(cfg.n_max + 1), range(1, cfg.r_max + 1)):
            log.check(
                {"dist": dist, "lambda": lam, "n": n, "r": r},
                prob_fubini_poly_order(dist, n, r, lam),
                _weighted_integral(prob_bell_poly(dist, n, lam), r),
            )


@checker(IdentityId.THM2_15)
def _higher_order_recurrence(cfg: CheckConfig, log: CaseLog) -> None:
    x = _x_polynomial()
    for dist, lam in _dist_lambda(cfg):
        fubini = [prob_fubini_poly(dist, i, lam) for i in range(cfg.n_max)]
        shifted = [
            sum(
                (fubini[k - j] * (binomial(k, j) * degenerate_moment(dist, j + 1, lam)) for j in range(k + 1)),
                Polynomial(),
            )
            for k in range(cfg.n_max)
        ]
        for r in range(1, cfg.r_max + 1):
            higher = [prob_fubini_poly_order(dist, i, r, lam) for i in range(cfg.n_max + 1)]
            for n in range(cfg.n_max):
                inner = sum((higher[n - k] * shifted[k] * binomial(n, k) for k in range(n + 1)), Polynomial())
                log.check({"dist": dist, "lambda": lam, "n": n, "r": r}, higher[n + 1], x * inner * r)


@checker(IdentityId.THM2_16)
def _bernoulli_scaling(cfg: CheckConfig, log: CaseLog) -> None:
    bernoullis: List[Bernoulli] = []
    for dist in [*cfg.dists, Bernoulli(p=0), Bernoulli(p=1)]:
        if isinstance(dist, Bernoulli) and dist not in bernoullis:
            bernoullis.append(dist)
    for dist, lam in product(bernoullis, cfg.lambdas):
        for n in range(cfg.n_max + 1):
            log.check(
                {"dist": dist, "lambda": lam, "n": n},
                prob_fubini_poly(dist, n, lam),
                fubini_poly_degenerate(n, lam).scale_variable(dist.p),
            )


# --- suite -------------------------------------------------------------------


def resolve_identity(name: Union[str, IdentityId]) -> IdentityId:
    try:
        return IdentityId(name)
    except ValueError:
        raise UnknownIdentityError(f"unknown identity: {name}")


def check_identity(identity: Union[str, IdentityId], cfg: CheckConfig) -> CheckReport:
    identity = resolve_identity(identity)
    log = CaseLog()
    started = time.perf_counter()
    try:
        _CHECKERS[identity](cfg, log)
    except _Mismatch as mismatch:
        status = CheckStatus.KNOWN_DISCREPANCY if identity in EXPECTED_DISCREPANCIES else CheckStatus.FAIL
        counterexample: Optional[Counterexample] = mismatch.counterexample
    else:
        status, counterexample = CheckStatus.PASS, None
    elapsed = time.perf_counter() - started
    logger.info(f"{identity.value}: {status.value} after {log.cases} cases ({elapsed:.2f}s)")
    if status == CheckStatus.FAIL:
        logger.warning(f"{identity.value} failed at {counterexample.params}")
    return CheckReport(identity=identity, status=status, cases=log.cases, counterexample=counterexample)


def run_suite(
    cfg: CheckConfig,
    identities: Optional[Sequence[Union[str, IdentityId]]] = None,
    workers: Optional[int] = None,
) -> List[CheckReport]:
    """Run the selected checkers (all of them by default) in enumeration order."""
    selected = list(IdentityId) if identities is None else [resolve_identity(i) for i in identities]
    if len(set(cfg.lambdas)) < cfg.n_max + 1:
        logger.warning(
            f"only {len(set(cfg.lambdas))} distinct lambdas for n_max={cfg.n_max}; "
            "agreement in lambda is not conclusive for polynomial identities"
        )
    workers = workers or settings.SUITE_WORKERS
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda identity: check_identity(identity, cfg), selected))
    return [check_identity(identity, cfg) for identity in selected]


def suite_passed(reports: Iterable[CheckReport]) -> bool:
    return all(report.status != CheckStatus.FAIL for report in reports)
