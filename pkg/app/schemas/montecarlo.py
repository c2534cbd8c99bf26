from typing import Optional

from pydantic import BaseModel

from app.core.rational import RationalField
from app.models.distributions import DistributionField


class McEstimate(BaseModel):
    dist: DistributionField
    k: int
    n: int
    lam: RationalField
    estimate: float
    stderr: float
    exact: RationalField
    z_score: Optional[float] = None  # undefined when every sample agrees
    samples: int
    seed: int
    within_threshold: bool
