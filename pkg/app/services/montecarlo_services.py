"""Seeded Monte Carlo estimate of E[(S_k)_{n,lam}] next to its exact value."""
import logging
from fractions import Fraction

import numpy as np

from app.core.config import settings
from app.core.exceptions import InvalidParameterError
from app.core.rational import LambdaParam
from app.models.distributions import MomentProvider
from app.schemas.montecarlo import McEstimate
from app.services.probabilistic_services import sum_degenerate_moment

logger = logging.getLogger(__name__)


def sample_sums(dist: MomentProvider, k: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    totals = np.zeros(samples)
    for _ in range(k):
        totals += dist.sample(rng, samples)
    return totals


def degenerate_falling(values: np.ndarray, n: int, lam: LambdaParam) -> np.ndarray:
    result = np.ones_like(values)
    step = float(lam)
    for i in range(n):
        result *= values - i * step
    return result


def standard_error(x: np.ndarray) -> float:
    if len(x) < 2:
        return float("nan")
    return float(np.std(x, ddof=1) / np.sqrt(len(x)))


def estimate(
    dist: MomentProvider,
    k: int,
    n: int,
    lam: LambdaParam,
    samples: int = settings.MC_DEFAULT_SAMPLES,
    seed: int = settings.MC_DEFAULT_SEED,
) -> McEstimate:
    if samples < settings.MC_MIN_SAMPLES:
        raise InvalidParameterError(f"samples must be >= {settings.MC_MIN_SAMPLES}, got {samples}")
    if k < 0 or n < 0:
        raise InvalidParameterError(f"k and n must be nonnegative, got k={k}, n={n}")
    if seed < 0:
        raise InvalidParameterError(f"seed must be nonnegative, got {seed}")
    rng = np.random.Generator(np.random.Philox(seed))
    values = degenerate_falling(sample_sums(dist, k, samples, rng), n, lam)
    exact: Fraction = sum_degenerate_moment(dist, k, n, lam)
    mean = float(np.mean(values))
    stderr = standard_error(values)
    z = (mean - float(exact)) / stderr if stderr > 0 else None
    within = abs(z) < settings.MC_Z_THRESHOLD if z is not None else mean == float(exact)
    if not within:
        logger.warning(f"MC estimate {mean} for {dist} is off the exact {exact} (z={z})")
    return McEstimate(
        dist=dist,
        k=k,
        n=n,
        lam=lam,
        estimate=mean,
        stderr=stderr,
        exact=exact,
        z_score=z,
        samples=samples,
        seed=seed,
        within_threshold=within,
    )
