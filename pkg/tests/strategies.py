"""Shared hypothesis strategies for exact rational inputs."""
from hypothesis import strategies as st

from app.models.polynomial import Polynomial
from app.models.series import TruncatedSeries

SERIES_ORDER = 6

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)

polynomials = st.lists(rationals, max_size=7).map(lambda coefficients: Polynomial(tuple(coefficients)))

_tails = st.lists(rationals, min_size=SERIES_ORDER, max_size=SERIES_ORDER)

# a_0 = 0, as series_exp needs
zero_constant_series = _tails.map(lambda tail: TruncatedSeries(SERIES_ORDER, (0, *tail)))

# a_0 != 0, as series_reciprocal needs
invertible_series = st.tuples(nonzero_rationals, _tails).map(
    lambda parts: TruncatedSeries(SERIES_ORDER, (parts[0], *parts[1]))
)
