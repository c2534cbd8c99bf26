"""Random-variable models with exact rational raw moments.

Every model is a frozen pydantic model, hence hashable and usable as a memo key.
Parameter bounds are enforced at construction time.
"""
import math
import re
from abc import abstractmethod
from fractions import Fraction
from typing import Annotated, Literal, Tuple, Union

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    TypeAdapter,
    ValidationError,
    WithJsonSchema,
    field_validator,
)

from app.core.exceptions import DistributionSpecError, RationalParseError
from app.core.rational import RationalField, format_rational, parse_rational
from app.services import combinatorics_services


class Distribution(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str

    @abstractmethod
    def raw_moment(self, m: int) -> Fraction: ...

    @abstractmethod
    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray: ...

    @property
    @abstractmethod
    def spec(self) -> str: ...

    def __str__(self) -> str:
        return self.spec


class PointMass(Distribution):
    kind: Literal["point"] = "point"
    c: RationalField

    def raw_moment(self, m: int) -> Fraction:
        return self.c**m

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.full(size, float(self.c))

    @property
    def spec(self) -> str:
        return f"point:{format_rational(self.c)}"


class Bernoulli(Distribution):
    kind: Literal["bernoulli"] = "bernoulli"
    p: RationalField

    @field_validator("p")
    @classmethod
    def _probability(cls, value: Fraction) -> Fraction:
        if not 0 <= value <= 1:
            raise ValueError(f"bernoulli needs 0 <= p <= 1, got {format_rational(value)}")
        return value

    def raw_moment(self, m: int) -> Fraction:
        return Fraction(1) if m == 0 else self.p

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return (rng.random(size) < float(self.p)).astype(float)

    @property
    def spec(self) -> str:
        return f"bernoulli:{format_rational(self.p)}"


class Poisson(Distribution):
    kind: Literal["poisson"] = "poisson"
    alpha: RationalField

    @field_validator("alpha")
    @classmethod
    def _positive(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"poisson needs alpha > 0, got {format_rational(value)}")
        return value

    def raw_moment(self, m: int) -> Fraction:
        # Touchard polynomial: sum_k S2(m, k) alpha^k
        return sum(
            (combinatorics_services.stirling2_classical(m, k) * self.alpha**k for k in range(m + 1)),
            Fraction(0),
        )

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.poisson(float(self.alpha), size).astype(float)

    @property
    def spec(self) -> str:
        return f"poisson:{format_rational(self.alpha)}"


class Gamma(Distribution):
    """Gamma(alpha, beta) with density beta e^(-beta y) (beta y)^(alpha-1) / Gamma(alpha)."""

    kind: Literal["gamma"] = "gamma"
    alpha: RationalField
    beta: RationalField

    @field_validator("alpha", "beta")
    @classmethod
    def _positive(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise ValueError(f"gamma needs alpha > 0 and beta > 0, got {format_rational(value)}")
        return value

    def raw_moment(self, m: int) -> Fraction:
        rising = math.prod((self.alpha + i for i in range(m)), start=Fraction(1))
        return rising / self.beta**m

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.gamma(float(self.alpha), 1.0 / float(self.beta), size)

    @property
    def spec(self) -> str:
        return f"gamma:{format_rational(self.alpha)},{format_rational(self.beta)}"


class FiniteDiscrete(Distribution):
    kind: Literal["discrete"] = "discrete"
    atoms: Tuple[Tuple[RationalField, RationalField], ...]

    @field_validator("atoms")
    @classmethod
    def _weights(cls, atoms):
        if not atoms:
            raise ValueError("discrete needs at least one value=weight pair")
        if any(weight <= 0 for _, weight in atoms):
            raise ValueError("discrete weights must be positive")
        total = sum((weight for _, weight in atoms), Fraction(0))
        if total != 1:
            raise ValueError(f"discrete weights must sum to 1, got {format_rational(total)}")
        return atoms

    def raw_moment(self, m: int) -> Fraction:
        return sum((weight * value**m for value, weight in self.atoms), Fraction(0))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        values = np.array([float(v) for v, _ in self.atoms])
        weights = np.array([float(w) for _, w in self.atoms])
        return rng.choice(values, size=size, p=weights / weights.sum())

    @property
    def spec(self) -> str:
        pairs = ",".join(f"{format_rational(v)}={format_rational(w)}" for v, w in self.atoms)
        return f"discrete:{pairs}"


MomentProvider = Annotated[
    Union[PointMass, Bernoulli, Poisson, Gamma, FiniteDiscrete],
    Field(discriminator="kind"),
]

_ADAPTER = TypeAdapter(MomentProvider)
_SPEC_RE = re.compile(r"^\s*([a-z]+)\s*:\s*(.+?)\s*$")
_ARITY = {"point": ("c",), "bernoulli": ("p",), "poisson": ("alpha",), "gamma": ("alpha", "beta")}


def _rational_token(token: str, spec: str) -> Fraction:
    try:
        return parse_rational(token)
    except RationalParseError:
        raise DistributionSpecError(f"bad token '{token.strip()}' in distribution spec '{spec}'")


def parse_distribution(spec: str) -> MomentProvider:
    """Parse ``point:c``, ``bernoulli:p``, ``poisson:a``, ``gamma:a,b`` or
    ``discrete:v1=w1,v2=w2,...``."""
    match = _SPEC_RE.match(spec or "")
    if not match:
        raise DistributionSpecError(f"bad distribution spec '{spec}': expected kind:params")
    kind, body = match.groups()
    tokens = body.split(",")
    if kind == "discrete":
        atoms = []
        for token in tokens:
            if token.count("=") != 1:
                raise DistributionSpecError(f"bad token '{token.strip()}' in distribution spec '{spec}'")
            value, weight = token.split("=")
            atoms.append((_rational_token(value, spec), _rational_token(weight, spec)))
        payload = {"kind": kind, "atoms": tuple(atoms)}
    elif kind in _ARITY:
        names = _ARITY[kind]
        if len(tokens) != len(names):
            raise DistributionSpecError(
                f"bad distribution spec '{spec}': {kind} takes {len(names)} parameter(s)"
            )
        payload = {"kind": kind, **{name: _rational_token(t, spec) for name, t in zip(names, tokens)}}
    else:
        raise DistributionSpecError(f"bad token '{kind}' in distribution spec '{spec}': unknown kind")
    try:
        return _ADAPTER.validate_python(payload)
    except ValidationError as e:
        reasons = "; ".join(err["msg"].removeprefix("Value error, ") for err in e.errors())
        raise DistributionSpecError(f"invalid parameters in '{spec}': {reasons}") from e


def _parse_if_spec(value):
    if isinstance(value, str):
        try:
            return parse_distribution(value)
        except DistributionSpecError as e:
            raise ValueError(str(e)) from e
    return value


DistributionField = Annotated[
    MomentProvider,
    BeforeValidator(_parse_if_spec),
    PlainSerializer(lambda dist: dist.spec, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["bernoulli:2/5", "gamma:3/2,2"]}),
]
