from typing import Generator

import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.models.distributions import parse_distribution
from app.schemas.checks import CheckConfig


@pytest.fixture(scope="module")
def client() -> Generator[TestClient, None, None]:
    """
    Synchronous test client; every endpoint is a plain ``def``.
    """
    with TestClient(app) as c:
        yield c


@pytest.fixture(scope="session")
def default_config() -> CheckConfig:
    return CheckConfig.default()


@pytest.fixture
def quick_config() -> CheckConfig:
    """
    Small grid for tests that run a checker many times.
    """
    return CheckConfig.default(
        lambdas=["0", "1/2", "-3", "7/5", "2"],
        n_max=4,
        r_max=2,
        x_points=["1", "-1/3"],
        series_order=6,
    )


@pytest.fixture
def bernoulli():
    return parse_distribution("bernoulli:2/5")


