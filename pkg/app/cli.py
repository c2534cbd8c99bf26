"""
Command-line interface for ProbFubini.

Usage:
    python -m app.cli table --dist bernoulli:2/5 --lambda 1/2 --n-max 2
    python -m app.cli verify --suite all
    python -m app.cli series --dist point:1 --lambda 1 --order 2 --x 1
    python -m app.cli mc --dist poisson:2 --k 3 --n 4 --lambda 1/2
    python -m app.cli partial-sum --dist gamma:1,1 --lambda 1/2 --n 3 --x 1/3

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
"""
from __future__ import annotations

import sys
from typing import Iterable, Optional

import click
from pydantic import BaseModel, ValidationError

from app.core.config import settings
from app.core.exceptions import DistributionSpecError, ProbFubiniError, RationalParseError
from app.core.logging_config import configure_logging
from app.core.rational import format_rational, parse_rational
from app.models.distributions import parse_distribution
from app.models.enums import IdentityId, OutputFormat
from app.schemas.checks import CheckConfig
from app.schemas.document import Document
from app.services import export_services, identity_services, montecarlo_services, table_services

__all__ = [
    "cli",
]


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return parse_rational(value)
        except RationalParseError as e:
            self.fail(str(e), param, ctx)


class DistributionType(click.ParamType):
    name = "dist"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_distribution(value)
        except DistributionSpecError as e:
            self.fail(str(e), param, ctx)


class IdentityType(click.ParamType):
    name = "identity"

    def convert(self, value, param, ctx):
        if value == "all" or isinstance(value, IdentityId):
            return value
        try:
            return IdentityId(value)
        except ValueError:
            self.fail(f"unknown identity: {value}", param, ctx)


RATIONAL = RationalType()
DIST = DistributionType()
IDENTITY = IdentityType()

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.JSON.value,
    show_default=True,
    help="Output format.",
)
out_option = click.option(
    "--out", type=click.File("w"), default="-", help="Write the document here instead of stdout."
)


def emit(out, document: Document, rows: Iterable[BaseModel], fmt: str) -> None:
    out.write(export_services.render(document, rows, OutputFormat(fmt)))


def _usage_error(e: Exception) -> click.UsageError:
    return click.UsageError(str(e))


@click.group()
@click.version_option(version="0.1.0", prog_name="probfubini")
@click.option("--log-level", default=None, help=f"Logging level (default {settings.LOG_LEVEL}).")
def cli(log_level: Optional[str]):
    """
    Exact probabilistic degenerate Fubini polynomials.

    Examples:

        probfubini table --dist point:1 --lambda 0 --n-max 4

        probfubini verify --suite THM2_16 --dists bernoulli:1
    """
    configure_logging(log_level)


@cli.command()
@click.option("--dist", type=DIST, required=True, help="Distribution spec, e.g. bernoulli:2/5.")
@click.option("--lambda", "lam", type=RATIONAL, required=True, help="Degeneracy parameter.")
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option("--r", "r", type=int, default=None, help="Emit the order-r polynomials instead.")
@format_option
@out_option
def table(dist, lam, n_max: int, r: Optional[int], fmt: str, out):
    """
    Coefficient vectors of F^Y_{n,lambda}(x) for n = 0..n-max, with their value at x = 1.
    """
    try:
        rows = table_services.table_rows(dist, lam, n_max, r)
    except ProbFubiniError as e:
        raise _usage_error(e)
    params = {"dist": dist.spec, "lambda": format_rational(lam), "n_max": str(n_max)}
    if r is not None:
        params["r"] = str(r)
    emit(out, Document(command="table", params=params, rows=rows), rows, fmt)


@cli.command()
@click.option("--suite", type=IDENTITY, multiple=True, default=["all"], show_default=True,
              help="Identity to check; repeat for several, or 'all'.")
@click.option("--lambdas", type=RATIONAL, multiple=True, help="Lambda grid (repeatable).")
@click.option("--n-max", type=int, default=None)
@click.option("--r-max", type=int, default=None)
@click.option("--dists", type=DIST, multiple=True, help="Distribution grid (repeatable).")
@click.option("--x-points", type=RATIONAL, multiple=True, help="x values for series checks (repeatable).")
@click.option("--series-order", type=int, default=None)
@click.option("--depth", "coefficient_depth", type=int, default=None, help="Coefficient depth for infinite sums.")
@click.option("--workers", type=int, default=None, help="Run checkers on this many threads.")
@format_option
@out_option
def verify(suite, lambdas, n_max, r_max, dists, x_points, series_order, coefficient_depth, workers, fmt, out):
    """
    Run the identity suite and report each identity's status.
    """
    try:
        cfg = CheckConfig.default(
            lambdas=list(lambdas) or None,
            n_max=n_max,
            r_max=r_max,
            dists=list(dists) or None,
            x_points=list(x_points) or None,
            series_order=series_order,
            coefficient_depth=coefficient_depth,
        )
    except ValidationError as e:
        raise _usage_error(e)
    selection = None if "all" in suite else list(suite)
    reports = identity_services.run_suite(cfg, selection, workers=workers)
    passed = identity_services.suite_passed(reports)
    params = {
        "suite": ",".join("all" if s == "all" else s.value for s in suite),
        "lambdas": ",".join(format_rational(v) for v in cfg.lambdas),
        "n_max": str(cfg.n_max),
        "r_max": str(cfg.r_max),
        "dists": " ".join(d.spec for d in cfg.dists),
        "x_points": ",".join(format_rational(v) for v in cfg.x_points),
        "series_order": str(cfg.series_order),
        "coefficient_depth": str(cfg.depth),
    }
    emit(out, Document(command="verify", params=params, passed=passed, rows=reports), reports, fmt)
    if not passed:
        sys.exit(1)


@cli.command()
@click.option("--dist", type=DIST, required=True)
@click.option("--lambda", "lam", type=RATIONAL, required=True)
@click.option("--order", type=int, default=settings.SERIES_ORDER, show_default=True)
@click.option("--x", type=RATIONAL, default="1", show_default=True)
@format_option
@out_option
def series(dist, lam, order: int, x, fmt: str, out):
    """
    t^n/n! coefficients, n = 0..order, of 1/(1 - x(E[e_lambda^Y(t)] - 1)).
    """
    try:
        rows = table_services.series_rows(dist, lam, order, x)
    except ProbFubiniError as e:
        raise _usage_error(e)
    params = {"dist": dist.spec, "lambda": format_rational(lam), "order": str(order), "x": format_rational(x)}
    emit(out, Document(command="series", params=params, rows=rows), rows, fmt)


@cli.command()
@click.option("--dist", type=DIST, required=True)
@click.option("--k", type=int, required=True, help="Number of iid summands.")
@click.option("--n", type=int, required=True, help="Degree of the degenerate falling factorial.")
@click.option("--lambda", "lam", type=RATIONAL, required=True)
@click.option("--samples", type=int, default=settings.MC_DEFAULT_SAMPLES, show_default=True)
@click.option("--seed", type=int, default=settings.MC_DEFAULT_SEED, show_default=True)
@format_option
@out_option
def mc(dist, k: int, n: int, lam, samples: int, seed: int, fmt: str, out):
    """
    Monte Carlo estimate of E[(S_k)_{n,lambda}] against the exact value.
    """
    try:
        result = montecarlo_services.estimate(dist, k, n, lam, samples=samples, seed=seed)
    except ProbFubiniError as e:
        raise _usage_error(e)
    params = {
        "dist": dist.spec,
        "k": str(k),
        "n": str(n),
        "lambda": format_rational(lam),
        "samples": str(samples),
        "seed": str(seed),
    }
    document = Document(command="mc", params=params, passed=result.within_threshold, rows=[result])
    emit(out, document, [result], fmt)
    if not result.within_threshold:
        sys.exit(1)


@cli.command(name="partial-sum")
@click.option("--dist", type=DIST, required=True)
@click.option("--lambda", "lam", type=RATIONAL, required=True)
@click.option("--n", type=int, required=True)
@click.option("--x", type=RATIONAL, required=True, help="Needs |x/(1+x)| <= 1/2.")
@click.option("--terms", type=int, default=40, show_default=True)
@format_option
@out_option
def partial_sum(dist, lam, n: int, x, terms: int, fmt: str, out):
    """
    Compare F^Y_{n,lambda}(x) with a truncation of its series in x/(1+x).
    """
    try:
        row = table_services.partial_sum(dist, lam, n, x, terms)
    except ProbFubiniError as e:
        raise _usage_error(e)
    params = {
        "dist": dist.spec,
        "lambda": format_rational(lam),
        "n": str(n),
        "x": format_rational(x),
        "terms": str(terms),
    }
    emit(out, Document(command="partial-sum", params=params, rows=[row]), [row], fmt)


if __name__ == "__main__":
    cli()
