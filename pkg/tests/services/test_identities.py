from fractions import Fraction
from itertools import product

import pytest
from pydantic import ValidationError

from app.core.exceptions import UnknownIdentityError
from app.models.distributions import parse_distribution
from app.models.enums import CheckStatus, IdentityId
from app.schemas.checks import CheckConfig, CheckReport
from app.services import identity_services
from app.services.combinatorics_services import perturbed_entry
from app.services.degenerate_services import fubini_poly_degenerate
from app.services.probabilistic_services import perturbed_moment, prob_fubini_poly


def ordered_set_partitions(n: int) -> int:
    """Count ordered set partitions of an n-set as surjections onto 0..k-1."""
    if n == 0:
        return 1
    return sum(
        1
        for k in range(1, n + 1)
        for blocks in product(range(k), repeat=n)
        if len(set(blocks)) == k
    )


def test_classical_fubini_numbers_match_brute_force():
    expected = [1, 1, 3, 13, 75, 541, 4683]
    assert [ordered_set_partitions(n) for n in range(7)] == expected
    assert [fubini_poly_degenerate(n, 0)(1) for n in range(7)] == expected


@pytest.fixture(scope="module")
def default_reports():
    return identity_services.run_suite(CheckConfig.default())


def test_default_suite(default_reports):
    assert [r.identity for r in default_reports] == list(IdentityId)
    statuses = {r.identity: r.status for r in default_reports}
    assert statuses.pop(IdentityId.THM2_9_PRINTED) == CheckStatus.KNOWN_DISCREPANCY
    assert set(statuses.values()) == {CheckStatus.PASS}
    assert identity_services.suite_passed(default_reports)
    assert all(r.cases > 0 for r in default_reports)


def test_default_suite_printed_derivative_counterexample(default_reports):
    printed = next(r for r in default_reports if r.identity == IdentityId.THM2_9_PRINTED)
    assert printed.counterexample.params["n"] == "1"
    assert printed.counterexample.params["r"] == "1"
    assert printed.counterexample.lhs != printed.counterexample.rhs


def small_config(**overrides) -> CheckConfig:
    values = dict(n_max=1, r_max=1, dists=["bernoulli:2/5"], lambdas=["1/2"])
    values.update(overrides)
    return CheckConfig.default(**values)


def test_printed_derivative_is_a_known_discrepancy():
    report = identity_services.check_identity(IdentityId.THM2_9_PRINTED, small_config())
    assert report.status == CheckStatus.KNOWN_DISCREPANCY
    assert report.cases == 1
    assert report.counterexample.params == {"dist": "bernoulli:2/5", "lambda": "1/2", "n": "1", "r": "1"}
    assert report.counterexample.lhs == ["2/5"]
    assert report.counterexample.rhs == ["2/5", "4/5"]


def test_printed_derivative_keeps_the_binomial_weight():
    dist = parse_distribution("bernoulli:2/5")
    rhs = identity_services.printed_derivative_rhs(dist, 2, 1, Fraction(1, 2))
    assert rhs.to_strings() == ["1/5", "26/25", "24/25"]
    lhs = prob_fubini_poly(dist, 2, Fraction(1, 2)).derivative(1)
    assert lhs.to_strings() == ["1/5", "16/25"]


def test_corrected_derivative_passes():
    report = identity_services.check_identity("THM2_9_CORRECTED", small_config())
    assert report.status == CheckStatus.PASS
    assert report.counterexample is None
    assert report.cases == 4


def test_corrected_derivative_on_the_acceptance_grid(default_config):
    cfg = default_config.model_copy(update={"n_max": 8})
    assert identity_services.check_identity(IdentityId.THM2_9_CORRECTED, cfg).status == CheckStatus.PASS


@pytest.mark.parametrize("identity", [IdentityId.EQ19_INV, IdentityId.EQ29_BELL, IdentityId.EQ23_GF])
def test_independent_paths_agree(identity, default_config):
    cfg = default_config.model_copy(update={"n_max": 8})
    assert identity_services.check_identity(identity, cfg).status == CheckStatus.PASS


def test_bernoulli_scaling_adds_boundary_cases(quick_config):
    report = identity_services.check_identity(IdentityId.THM2_16, quick_config)
    assert report.status == CheckStatus.PASS
    assert report.cases == 3 * len(quick_config.lambdas) * (quick_config.n_max + 1)


def test_distribution_specific_identity_without_matching_dist():
    cfg = small_config(dists=["point:1"])
    for identity in (IdentityId.THM2_3, IdentityId.THM2_11, IdentityId.THM2_12):
        report = identity_services.check_identity(identity, cfg)
        assert report.status == CheckStatus.PASS
        assert report.cases == 0


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError, match="unknown identity: NOPE"):
        identity_services.check_identity("NOPE", small_config())
    with pytest.raises(UnknownIdentityError):
        identity_services.run_suite(small_config(), ["EQ6", "NOPE"])


@pytest.mark.parametrize("field", ["dists", "lambdas", "x_points"])
def test_config_grids_must_be_nonempty(field):
    with pytest.raises(ValidationError):
        CheckConfig.default(**{field: []})
    with pytest.raises(ValidationError):
        CheckConfig.model_validate({**CheckConfig.default().model_dump(), field: []})


def test_config_bounds():
    with pytest.raises(ValidationError):
        small_config(n_max=0)
    with pytest.raises(ValidationError):
        small_config(dists=["poisson:0"])
    assert small_config().depth == 8
    assert small_config(coefficient_depth=3).depth == 3


def test_failed_report_needs_counterexample():
    with pytest.raises(ValidationError):
        CheckReport(identity=IdentityId.EQ6, status=CheckStatus.FAIL, cases=1)


def test_threaded_suite_keeps_order(quick_config):
    serial = identity_services.run_suite(quick_config)
    threaded = identity_services.run_suite(quick_config, workers=4)
    assert [r.identity for r in threaded] == list(IdentityId)
    assert [r.model_dump() for r in threaded] == [r.model_dump() for r in serial]


def test_selected_identities(quick_config):
    reports = identity_services.run_suite(quick_config, ["THM2_16", IdentityId.EQ6])
    assert [r.identity for r in reports] == [IdentityId.THM2_16, IdentityId.EQ6]


MUTATIONS = [
    ("stirling1", 3, 2),
    ("stirling1", 4, 2),
    ("stirling2", 3, 2),
    ("stirling2", 4, 3),
    ("lah", 3, 2),
    ("lah", 4, 2),
    ("binomial", 4, 2),
]
MOMENT_MUTATIONS = [("bernoulli:2/5", 2), ("poisson:3/2", 2), ("gamma:1,1", 3)]


def failures(reports):
    return [r for r in reports if r.status == CheckStatus.FAIL]


@pytest.mark.parametrize("table, n, k", MUTATIONS)
def test_table_perturbation_is_detected(table, n, k, quick_config):
    with perturbed_entry(table, n, k):
        failed = failures(identity_services.run_suite(quick_config))
    assert failed
    assert all(r.counterexample.lhs != r.counterexample.rhs for r in failed)


@pytest.mark.parametrize("spec, m", MOMENT_MUTATIONS)
def test_moment_perturbation_is_detected(spec, m, quick_config):
    with perturbed_moment(parse_distribution(spec), m):
        assert failures(identity_services.run_suite(quick_config))


def test_lah_perturbation_breaks_gamma_formula(quick_config):
    with perturbed_entry("lah", 3, 2):
        report = identity_services.check_identity(IdentityId.THM2_3, quick_config)
    assert report.status == CheckStatus.FAIL
    assert report.counterexample.params["n"] == "3"


def test_suite_recovers_after_perturbation(quick_config):
    with perturbed_entry("binomial", 4, 2):
        pass
    assert identity_services.suite_passed(identity_services.run_suite(quick_config))


def test_generating_series_agrees_with_polynomial_at_one():
    cfg = small_config(n_max=3, lambdas=["0", "1", "-1/4", "2"], x_points=["1"], series_order=5)
    report = identity_services.check_identity(IdentityId.THM2_1, cfg)
    assert report.status == CheckStatus.PASS
    assert report.cases == 4 * 6 + 4 * 4
