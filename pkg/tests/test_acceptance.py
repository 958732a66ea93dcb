"""End-to-end properties of the full registry, at sample sizes small enough for a unit test run."""

import numpy as np
import pytest

from young_heinz_sdk import inequality_suite as suite
from young_heinz_sdk import scalar_kernel as sk
from young_heinz_sdk.core import Variant
from young_heinz_sdk.harness_cli import cmd_audit, cmd_suite, pinned_violations
from young_heinz_sdk.sampling import SampleConfig, gen_scalars, log_grid_pairs, seeded_matrix_samples

SCALAR_IDS = [check_id for check_id, check in suite.REGISTRY.items() if check.scalar]
MATRIX_IDS = [check_id for check_id, check in suite.REGISTRY.items() if not check.scalar]


def _no_violations(check_id, config):
    check = suite.get_check(check_id)
    for param in check.param_grid(config):
        for outcome in suite.iter_outcomes(check, config, param=param):
            if outcome.skipped:
                continue
            assert outcome.verdict.holds, (check_id, param, outcome.label, outcome.nu, outcome.verdict.chain)


@pytest.mark.parametrize("check_id", SCALAR_IDS)
def test_scalar_checks_hold(check_id):
    _no_violations(check_id, SampleConfig(scalar_count=2000))


@pytest.mark.parametrize("check_id", MATRIX_IDS)
@pytest.mark.parametrize("n", [1, 3])
def test_matrix_checks_hold(check_id, n):
    _no_violations(check_id, SampleConfig(n=n, count=25, m_values=[1, 2, 3]))


def test_scalar_chains_tight_on_the_diagonal():
    for check_id in ("young-refined", "young-squared", "quadratic-gap", "heinz-mean", "lemma312"):
        for a in (1e-3, 1.0, 1e3):
            verdict = suite.check_scalar(check_id, a, a, 0.3)
            assert max(abs(s) for s in verdict.slacks) <= 1e-12 * max(1.0, a * a)


def test_lemma312_tight_at_one_zero():
    assert sk.lemma312_gap(1.0, 0.0, 0.3).slacks()[0] == pytest.approx(0.0, abs=1e-12)


def test_printed_quadratic_gap_lower_is_exact_at_quarter():
    for _, a, b in log_grid_pairs(25):
        chain = sk.quadratic_gap_bounds(a, b, 0.25, Variant.PRINTED)
        assert chain["lower"] == pytest.approx(chain["gap"], rel=1e-10, abs=1e-10 * max(a, b) ** 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_hs_identities_on_seeded_triples(n):
    for sample in seeded_matrix_samples(99, n, 40):
        assert all(v.holds for v in suite.check_hs_identities(sample.a, sample.b, sample.x))


def test_prop38_matches_zhaowu_on_every_sample():
    grid = [0.1, 0.3, 0.5, 0.6, 0.9]
    for i, sample in enumerate(seeded_matrix_samples(5, 3, 50)):
        nu = grid[i % len(grid)]
        left = suite.check_prop38(sample.a, sample.b, sample.x, nu).values()
        right = suite.check_zhaowu_hs(sample.a, sample.b, sample.x, nu).values()
        scale = max(1.0, *map(abs, right))
        assert np.allclose(left, right, rtol=0, atol=1e-10 * scale)


def test_one_by_one_checks_match_scalar_chains():
    a_values, b_values = gen_scalars(1, 50), gen_scalars(2, 50)
    for a, b in zip(a_values, b_values):
        heinz = suite.check_thm313([[a]], [[b]], [[1.0]], 0.3)
        lemma = sk.lemma312_gap(a, b, 0.3)
        assert heinz.min_slack == pytest.approx(lemma.slacks()[0], rel=1e-12, abs=1e-12 * (a + b) ** 2)

        trace = suite.check_classical_young("trace", [[a]], [[b]], None, 0.3).values()
        assert trace[0] == pytest.approx(a**0.7 * b**0.3, rel=1e-12)
        assert trace[1] == pytest.approx(sk.young_refined(a, b, 0.3)["x"], rel=1e-12)


def test_suite_passes_on_small_default_config():
    config = SampleConfig(n=2, count=10, scalar_count=300, norms=["hs", "op", "kyfan:2"], m_values=[1, 2])
    report = cmd_suite(config, progress=False)
    assert pinned_violations(report) == 0
    assert len({entry.check_id for entry in report.entries}) == len(suite.REGISTRY)


def test_audit_separates_sababheh_readings():
    config = SampleConfig(n=2, audit_count=20, norms=["hs", "trace"], nu_grid=[0.1, 0.3, 0.5])
    report = cmd_audit("sababheh", config, progress=False)
    verdicts = {(f.variant, f.param): f for f in report.audit}
    for norm_name in ("hs", "trace"):
        assert verdicts[("corrected", f"norm={norm_name}")].verdict == "universal"
        printed = verdicts[("printed", f"norm={norm_name}")]
        assert printed.verdict == "violated"
        assert printed.witnesses[0]["label"] == "scalar:identity"
        assert printed.witnesses[0]["min_slack"] == pytest.approx(-1.6, abs=1e-12)
