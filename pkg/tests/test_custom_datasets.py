import json

import numpy as np
import pandas as pd
import pytest
from kedro.io import DatasetError

from young_heinz_sdk.core import Variant, make_verdict
from young_heinz_sdk.custom_datasets import MatrixInputsDataset, ReportDataset, VerdictDataset
from young_heinz_sdk.inequality_suite import get_check
from young_heinz_sdk.reporting import ENTRY_COLUMNS, Report, new_report, summarize
from young_heinz_sdk.sampling import SampleConfig


@pytest.fixture
def report():
    report = new_report("suite", SampleConfig(n=2, count=2), created_at="2024-01-01T00:00:00+00:00")
    report.entries.append(summarize(get_check("lemma31"), Variant.CORRECTED, {}, [], 1e-8))
    return report


def test_report_dataset_json(tmp_path, report):
    dataset = ReportDataset(filepath=str(tmp_path / "out" / "report.json"))
    dataset.save(report)
    assert dataset.exists()
    loaded = dataset.load()
    assert isinstance(loaded, Report)
    assert loaded == report


def test_report_dataset_csv(tmp_path, report):
    path = tmp_path / "report.csv"
    ReportDataset(filepath=str(path), format="csv").save(report)
    frame = pd.read_csv(path)
    assert list(frame.columns) == ENTRY_COLUMNS
    assert frame.loc[0, "check_id"] == "lemma31"


def test_report_dataset_rejects_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        ReportDataset(filepath=str(tmp_path / "r.xml"), format="xml")


def test_verdict_dataset_json(tmp_path):
    verdict = make_verdict("thm313", Variant.CORRECTED, [("lhs", 1.0), ("rhs", 2.5)], tol=1e-9, nu=0.3)
    dataset = VerdictDataset(filepath=str(tmp_path / "out" / "verdict.json"))
    dataset.save(verdict)
    assert dataset.exists()

    loaded = dataset.load()
    assert loaded["check_id"] == "thm313"
    assert loaded["holds"] is True
    assert loaded["slacks"] == [1.5]


def test_matrix_inputs_dataset(tmp_path):
    path = tmp_path / "inputs.json"
    path.write_text(json.dumps({"A": [[[2, 0], [0, 1]], [[0, -1], [3, 0]]], "B": [[1, 0], [0, 1]], "nu": 0.3}))
    inputs = MatrixInputsDataset(filepath=str(path)).load()
    np.testing.assert_array_equal(inputs["A"], np.array([[2, 1j], [-1j, 3]]))
    assert inputs["B"].dtype == np.complex128
    assert inputs["nu"] == 0.3


def test_matrix_inputs_dataset_errors(tmp_path):
    with pytest.raises(DatasetError):
        MatrixInputsDataset(filepath=str(tmp_path / "missing.json")).load()

    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    with pytest.raises(DatasetError):
        MatrixInputsDataset(filepath=str(path)).load()

    with pytest.raises(DatasetError):
        MatrixInputsDataset(filepath=str(path)).save({})
