import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from app.core.exceptions import InvalidParameterError, SeriesError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in t over the rationals, known up to t^order.

    Coefficients are stored in the plain t^k basis. Values in the exponential
    convention (the number multiplying t^n/n!) are converted only through
    ``from_egf`` and ``egf_coefficients``.
    """

    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError(f"series order must be nonnegative, got {self.order}")
        values = [Fraction(c) for c in self.coefficients][: self.order + 1]
        values += [Fraction(0)] * (self.order + 1 - len(values))
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar], order: int) -> "TruncatedSeries":
        return cls(order, tuple(coefficients))

    @classmethod
    def from_egf(cls, values: Iterable[Scalar], order: int) -> "TruncatedSeries":
        return cls(order, tuple(Fraction(v) / math.factorial(n) for n, v in enumerate(values)))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,))

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0, 1))

    def egf_coefficients(self) -> List[Fraction]:
        return [c * math.factorial(n) for n, c in enumerate(self.coefficients)]

    def egf_coefficient(self, n: int) -> Fraction:
        return self.coefficients[n] * math.factorial(n)

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise SeriesError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            values = list(self.coefficients)
            values[0] += Fraction(other)
            return TruncatedSeries(self.order, tuple(values))
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> "TruncatedSeries":
        return -self + other

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = Fraction(other)
            return TruncatedSeries(self.order, tuple(c * other for c in self.coefficients))
        self._check_order(other)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries(
            self.order,
            tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(self.order + 1)),
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coefficients
        if a[0] == 0:
            raise SeriesError("reciprocal of a series with zero constant term")
        inverse_a0 = 1 / a[0]
        b = [inverse_a0]
        for n in range(1, self.order + 1):
            b.append(-inverse_a0 * sum((a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)))
        return TruncatedSeries(self.order, tuple(b))

    def exp(self) -> "TruncatedSeries":
        a = self.coefficients
        if a[0] != 0:
            raise SeriesError("exponential of a series with nonzero constant term")
        # n b_n = sum_{k=1}^{n} k a_k b_{n-k}
        b = [Fraction(1)]
        for n in range(1, self.order + 1):
            b.append(sum((k * a[k] * b[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return TruncatedSeries(self.order, tuple(b))

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise InvalidParameterError(f"negative series power {exponent}; use reciprocal()")
        result = TruncatedSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result
