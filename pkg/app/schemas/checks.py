from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.config import settings
from app.core.rational import RationalField
from app.models.distributions import DistributionField
from app.models.enums import CheckStatus, IdentityId


class CheckConfig(BaseModel):
    """Parameter grid shared by every identity checker."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lambdas: Tuple[RationalField, ...]
    n_max: int = Field(..., ge=1)
    r_max: int = Field(..., ge=1)
    dists: Tuple[DistributionField, ...]
    x_points: Tuple[RationalField, ...]
    series_order: int = Field(..., ge=0)
    coefficient_depth: Optional[int] = Field(None, ge=0)
    seed: int = settings.RANDOM_SEED

    @field_validator("lambdas", "dists", "x_points")
    @classmethod
    def _nonempty(cls, value, info):
        if not value:
            raise ValueError(f"{info.field_name} must not be empty")
        return value

    @property
    def depth(self) -> int:
        if self.coefficient_depth is not None:
            return self.coefficient_depth
        return 2 * self.n_max + 6

    @classmethod
    def default(cls, **overrides) -> "CheckConfig":
        values = {
            "lambdas": settings.DEFAULT_LAMBDAS,
            "n_max": settings.DEFAULT_N_MAX,
            "r_max": settings.DEFAULT_R_MAX,
            "dists": settings.DEFAULT_DISTS,
            "x_points": settings.DEFAULT_X_POINTS,
            "series_order": settings.SERIES_ORDER,
            "coefficient_depth": settings.COEFFICIENT_DEPTH,
            "seed": settings.RANDOM_SEED,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)


class Counterexample(BaseModel):
    params: Dict[str, str]
    lhs: List[str]
    rhs: List[str]


class CheckReport(BaseModel):
    identity: IdentityId
    status: CheckStatus
    cases: int
    counterexample: Optional[Counterexample] = None

    @model_validator(mode="after")
    def _failure_has_counterexample(self):
        if self.status == CheckStatus.FAIL and self.counterexample is None:
            raise ValueError("a failed check must carry its counterexample")
        return self


class VerifyRequest(BaseModel):
    suite: List[str] = ["all"]
    lambdas: Optional[List[str]] = None
    n_max: Optional[int] = None
    r_max: Optional[int] = None
    dists: Optional[List[str]] = None
    x_points: Optional[List[str]] = None
    series_order: Optional[int] = None
    coefficient_depth: Optional[int] = None
