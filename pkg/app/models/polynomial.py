import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from app.core.exceptions import InvalidParameterError
from app.core.rational import format_rational

Scalar = Union[int, Fraction]

ZERO_DEGREE = float("-inf")


def _normalize(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the rationals, index = degree.

    Canonical form: no trailing zero coefficients, so the zero polynomial is the
    empty tuple and equality is plain tuple equality.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "Polynomial":
        return cls((0,) * degree + (value,))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    __call__ = evaluate

    def derivative(self, r: int = 1) -> "Polynomial":
        if r < 0:
            raise InvalidParameterError(f"derivative order must be nonnegative, got {r}")
        if r == 0:
            return self
        return Polynomial(
            c * math.perm(k, r) for k, c in enumerate(self.coefficients) if k >= r
        )

    def scale_variable(self, factor: Scalar) -> "Polynomial":
        """Return p(factor * x)."""
        factor = Fraction(factor)
        return Polynomial(c * factor**k for k, c in enumerate(self.coefficients))

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-other if isinstance(other, Polynomial) else -Fraction(other))

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Fraction(other)
            return Polynomial(c * other for c in self.coefficients)
        if not self or not other:
            return Polynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(self.to_strings())}])"


def gamma_weight_integral(p: Polynomial, r: int) -> Fraction:
    """Exact value of the integral over (0, inf) of y^(r-1) p(y) e^(-y) dy.

    Each monomial y^k contributes Gamma(r + k) = (r + k - 1)!.
    """
    if r < 1:
        raise InvalidParameterError(f"Gamma weight needs r >= 1, got {r}")
    return sum(
        (c * math.factorial(r + k - 1) for k, c in enumerate(p.coefficients)),
        Fraction(0),
    )
