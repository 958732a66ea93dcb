import json
import math

import numpy as np
import pytest

from young_heinz_sdk.core import Variant, make_verdict
from young_heinz_sdk.inequality_suite import Outcome, evaluate_inputs, get_check, iter_outcomes
from young_heinz_sdk.reporting import (
    CURVE_COLUMNS,
    ENTRY_COLUMNS,
    MAX_WITNESSES,
    Report,
    audit_finding,
    curve,
    decode_inputs,
    decode_matrix,
    encode_matrix,
    new_report,
    summarize,
)
from young_heinz_sdk.sampling import SampleConfig

CHECK = get_check("young-refined")


def _outcome(label, nu, slack, a=1.0):
    verdict = make_verdict(
        CHECK.check_id, Variant.CORRECTED, [("lo", 0.0), ("hi", slack)], tol=1e-9, nu=nu, inputs={"a": a, "b": 2.0}
    )
    return Outcome(label, nu, {}, verdict)


def test_matrix_codec():
    matrix = np.array([[1 + 2j, 0], [0, 3]])
    assert encode_matrix(matrix)[0][0] == [1.0, 2.0]
    np.testing.assert_array_equal(decode_matrix(encode_matrix(matrix)), matrix)
    np.testing.assert_array_equal(decode_matrix([[1, 2], [3, 4]]), np.array([[1, 2], [3, 4]], dtype=complex))
    with pytest.raises(ValueError):
        decode_matrix([1, 2, 3])


def test_decode_inputs_passes_scalars_through():
    data = decode_inputs({"A": [[[1, 0]]], "nu": 0.3, "norm": "hs"})
    assert data["A"].shape == (1, 1)
    assert data["nu"] == 0.3 and data["norm"] == "hs"


def test_summarize_counts_and_argmin():
    outcomes = [
        _outcome("seed:0", 0.2, 1.0),
        _outcome("seed:1", 0.4, -2.0, a=5.0),
        Outcome("seed:2", 0.6, {}, None),
        _outcome("seed:3", 0.6, -2.0),
    ]
    entry = summarize(CHECK, Variant.CORRECTED, {}, outcomes, 1e-9)
    assert (entry.samples, entry.violations, entry.skipped) == (3, 2, 1)
    assert entry.min_slack == -2.0
    # ties keep the first sample
    assert entry.nu_at_min == 0.4
    assert entry.argmin_inputs["a"] == 5.0
    assert entry.argmin_inputs["nu"] == 0.4


def test_summarize_empty_population():
    entry = summarize(CHECK, Variant.CORRECTED, {"m": 2}, [], 1e-9)
    assert entry.samples == 0 and math.isinf(entry.min_slack)
    assert entry.param == "m=2"


def test_curve_groups_by_nu():
    outcomes = [_outcome("a", 0.5, 1.0), _outcome("b", 0.2, -1.0), _outcome("c", 0.5, 0.5)]
    points = curve(CHECK, Variant.CORRECTED, {}, outcomes)
    assert [p.nu for p in points] == [0.2, 0.5]
    assert points[1].samples == 2 and points[1].min_slack == 0.5
    assert points[0].violations == 1


def test_audit_finding_witnesses_structured_first():
    outcomes = [_outcome(f"seed:{i}", 0.3, -float(i + 1)) for i in range(6)]
    outcomes.insert(3, _outcome("scalar:identity", 0.3, -0.5))
    outcomes.append(_outcome("scalar:identity", 0.4, -0.7))
    finding = audit_finding(CHECK, Variant.PRINTED, {}, outcomes)

    assert finding.verdict == "violated"
    assert finding.violations == 8
    assert len(finding.witnesses) == MAX_WITNESSES
    assert finding.witnesses[0]["label"] == "scalar:identity"
    assert finding.witnesses[0]["min_slack"] == -0.7
    assert [w["label"] for w in finding.witnesses[1:]] == ["seed:5", "seed:4", "seed:3", "seed:2"]


def test_audit_finding_universal():
    finding = audit_finding(CHECK, Variant.CORRECTED, {}, [_outcome("seed:0", 0.3, 0.0)])
    assert finding.verdict == "universal"
    assert finding.witnesses == []


def test_report_json_round_trip_and_frames():
    config = SampleConfig(n=2, count=3)
    report = new_report("suite", config, created_at="2024-01-01T00:00:00+00:00")
    report.entries.append(summarize(CHECK, Variant.CORRECTED, {}, [_outcome("seed:0", 0.3, 1.0)], 1e-9))
    report.entries.append(summarize(CHECK, Variant.CORRECTED, {}, [], 1e-9))

    parsed = Report.from_json(report.to_json())
    assert parsed == report
    assert list(parsed.frame().columns) == ENTRY_COLUMNS
    assert list(parsed.curve_frame().columns) == CURVE_COLUMNS


def test_infinite_slack_is_json_null():
    report = new_report("suite", SampleConfig(n=2, count=3), created_at="2024-01-01T00:00:00+00:00")
    report.entries.append(summarize(CHECK, Variant.CORRECTED, {}, [], 1e-9))

    text = report.to_json()
    assert "Infinity" not in text
    assert json.loads(text)["entries"][0]["min_slack"] is None
    assert math.isinf(Report.from_json(text).entries[0].min_slack)


def test_run_id_depends_on_config_only():
    config = SampleConfig(n=2)
    first = new_report("suite", config, created_at="a")
    second = new_report("suite", config, created_at="b")
    assert first.run_id == second.run_id
    assert new_report("suite", config.replace(seed=1)).run_id != first.run_id
    assert new_report("sweep", config, check="thm313").run_id != first.run_id


def test_argmin_inputs_reproduce_min_slack():
    check = get_check("sababheh")
    config = SampleConfig(n=2, count=10, nu_grid=[0.2, 0.4])
    param = {"norm": "trace"}
    entry = summarize(check, Variant.CORRECTED, param, iter_outcomes(check, config, param=param), 1e-8)
    inputs = decode_inputs(entry.argmin_inputs)
    verdict = evaluate_inputs("sababheh", inputs, inputs["nu"], variant=entry.variant)
    assert verdict.min_slack == pytest.approx(entry.min_slack, abs=1e-15)
