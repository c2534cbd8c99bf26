from typing import List, Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    API_V1_STR: str = "/api/v1"
    PROJECT_NAME: str = "ProbFubini"
    LOG_LEVEL: str = "WARNING"

    # Identity suite grid
    DEFAULT_LAMBDAS: List[str] = [
        "0", "1/3", "1/2", "1", "-1/4", "7/5", "2", "-3", "5/2", "11/3", "-7/2", "13/4",
    ]
    DEFAULT_N_MAX: int = 10
    DEFAULT_R_MAX: int = 3
    DEFAULT_DISTS: List[str] = [
        "point:1",
        "point:5/2",
        "bernoulli:2/5",
        "poisson:3/2",
        "gamma:1,1",
        "gamma:3/2,2",
        "discrete:0=1/6,1=1/2,3=1/3",
    ]
    DEFAULT_X_POINTS: List[str] = ["1", "1/2", "-1/3"]
    SERIES_ORDER: int = 12
    COEFFICIENT_DEPTH: Optional[int] = None  # 2 * n_max + 6 when unset
    RANDOM_SEED: int = 20240601
    SUITE_WORKERS: int = 1

    # Monte Carlo
    MC_DEFAULT_SAMPLES: int = 1_000_000
    MC_MIN_SAMPLES: int = 1000
    MC_Z_THRESHOLD: float = 5.0
    MC_DEFAULT_SEED: int = 42

    CACHE_MAXSIZE: int = 65536

    class Config:
        env_file = ".env"
        extra = "ignore"


settings = Settings()
