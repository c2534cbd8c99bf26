from typing import Optional

from fastapi import APIRouter, HTTPException

from app.api.deps import Distribution, Lambda
from app.core.config import settings
from app.core.exceptions import InvalidParameterError
from app.core.rational import format_rational
from app.schemas.document import Document
from app.services import montecarlo_services

router = APIRouter()


@router.get("/", response_model=Document)
def monte_carlo(
    dist: Distribution,
    lam: Lambda,
    k: int,
    n: int,
    samples: int = settings.MC_DEFAULT_SAMPLES,
    seed: Optional[int] = None,
):
    seed = settings.MC_DEFAULT_SEED if seed is None else seed
    try:
        result = montecarlo_services.estimate(dist, k, n, lam, samples=samples, seed=seed)
    except InvalidParameterError as e:
        raise HTTPException(status_code=400, detail=str(e))
    params = {
        "dist": dist.spec,
        "k": str(k),
        "n": str(n),
        "lambda": format_rational(lam),
        "samples": str(samples),
        "seed": str(seed),
    }
    return Document(command="mc", params=params, passed=result.within_threshold, rows=[result])
