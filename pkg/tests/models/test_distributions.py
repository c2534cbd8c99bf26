from fractions import Fraction

import pytest

from app.core.exceptions import DistributionSpecError
from app.models.distributions import Bernoulli, Distribution, FiniteDiscrete, Gamma, Poisson, parse_distribution


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("point:5/2", "point:5/2"),
        ("bernoulli:2/5", "bernoulli:2/5"),
        ("poisson:3/2", "poisson:3/2"),
        ("gamma:3/2,2", "gamma:3/2,2"),
        ("discrete:0=1/6,1=1/2,3=1/3", "discrete:0=1/6,1=1/2,3=1/3"),
        ("gamma: 2/2 , 4/2", "gamma:1,2"),
    ],
)
def test_parse_and_spec(spec, expected):
    assert parse_distribution(spec).spec == expected


def test_parsed_models():
    assert parse_distribution("gamma:3/2,2") == Gamma(alpha=Fraction(3, 2), beta=2)
    assert parse_distribution("bernoulli:1") == Bernoulli(p=1)


@pytest.mark.parametrize(
    "dist, m, expected",
    [
        (Gamma(alpha=1, beta=1), 3, 6),
        (Poisson(alpha=2), 2, 6),
        (Bernoulli(p=Fraction(2, 5)), 7, Fraction(2, 5)),
        (Bernoulli(p=Fraction(2, 5)), 0, 1),
        (Gamma(alpha=Fraction(3, 2), beta=2), 2, Fraction(15, 16)),
        (parse_distribution("discrete:0=1/6,1=1/2,3=1/3"), 2, Fraction(7, 2)),
    ],
)
def test_raw_moment(dist, m, expected):
    assert dist.raw_moment(m) == expected


@pytest.mark.parametrize(
    "spec, message",
    [
        ("poisson:0", "alpha > 0"),
        ("bernoulli:3/2", "0 <= p <= 1"),
        ("gamma:1,-1", "alpha > 0 and beta > 0"),
        ("bernoulli:abc", "bad token 'abc'"),
        ("discrete:0=1/2,1=1/3", "sum to 1"),
        ("discrete:0=1/2,1", "bad token '1'"),
        ("weibull:1", "bad token 'weibull'"),
        ("gamma:1", "2 parameter"),
        ("point", "expected kind:params"),
    ],
)
def test_parse_errors(spec, message):
    with pytest.raises(DistributionSpecError, match=message):
        parse_distribution(spec)


def test_models_are_hashable_by_value():
    assert len({parse_distribution("point:1"), parse_distribution("point:1/1")}) == 1
    assert FiniteDiscrete(atoms=((0, Fraction(1, 2)), (1, Fraction(1, 2)))) == parse_distribution(
        "discrete:0=1/2,1=1/2"
    )


def test_base_model_needs_moments_and_sampler():
    with pytest.raises(TypeError):
        Distribution(kind="bare")
