"""Kedro datasets for harness reports and matrix inputs"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/50_custom_datasets.ipynb.

# %% auto 0
__all__ = ['logger', 'ReportDataset', 'VerdictDataset', 'MatrixInputsDataset']

# %% ../nbs/50_custom_datasets.ipynb 3
from kedro.io import AbstractDataset

from pathlib import Path

import typing as t

import pandas as pd

import json

from .core import Verdict
from .reporting import Report, decode_inputs, json_safe

# %% ../nbs/50_custom_datasets.ipynb 5
import logging

logger = logging.getLogger(__name__)


class ReportDataset(AbstractDataset):
    """
    Writes a harness report as JSON (the full report) or CSV (its main table).

    Loading a JSON file returns the `Report`, loading a CSV file the table as a DataFrame.
    """

    FORMATS = ("json", "csv")

    def __init__(self, filepath: str, format: str = "json", save_args=None):

        if format not in self.FORMATS:
            raise ValueError(f"Unknown report format '{format}', expected one of {self.FORMATS}")

        self.filepath = Path(filepath)
        self.format = format
        self.save_args = save_args or {}

    def _describe(self) -> t.Dict[str, t.Any]:
        """Returns a dict that describes the attributes of the dataset."""
        return dict(filepath=str(self.filepath), format=self.format)

    def _load(self) -> t.Union[Report, pd.DataFrame]:

        if not self.filepath.exists():
            raise FileNotFoundError(f"File not found at path: {self.filepath}")

        if self.format == "csv":
            return pd.read_csv(self.filepath)

        with open(self.filepath, "r") as json_file:
            return Report.from_json(json_file.read())

    def _save(self, data: Report) -> None:

        try:
            self.filepath.parent.mkdir(parents=True, exist_ok=True)

            if self.format == "csv":
                data.frame().to_csv(self.filepath, index=False, **self.save_args)
            else:
                with open(self.filepath, "w") as json_file:
                    json_file.write(data.to_json())

            logger.info(f"Wrote {data.kind} report {data.run_id} to {self.filepath}")

        except OSError as e:
            logger.error(f"Could not write report to {self.filepath}: {e}")
            raise e

    def _exists(self) -> bool:
        return self.filepath.exists()


class VerdictDataset(AbstractDataset):
    """
    Writes the verdict of a single check evaluation as JSON; loading returns the plain dict.
    """

    def __init__(self, filepath: str):
        self.filepath = Path(filepath)

    def _load(self) -> t.Dict[str, t.Any]:

        if not self.filepath.exists():
            raise FileNotFoundError(f"File not found at path: {self.filepath}")

        with open(self.filepath, "r") as json_file:
            return json.load(json_file)

    def _save(self, data: Verdict) -> None:

        try:
            self.filepath.parent.mkdir(parents=True, exist_ok=True)
            with open(self.filepath, "w") as json_file:
                json_file.write(json.dumps(json_safe(data.to_dict()), indent=2, allow_nan=False))

            logger.info(f"Wrote {data.check_id} verdict to {self.filepath}")

        except OSError as e:
            logger.error(f"Could not write verdict to {self.filepath}: {e}")
            raise e

    def _describe(self) -> t.Dict[str, t.Any]:
        return dict(filepath=str(self.filepath))

    def _exists(self) -> bool:
        return self.filepath.exists()


class MatrixInputsDataset(AbstractDataset):
    """
    Read-only dataset for a single set of check inputs.

    The file is a JSON object holding either the matrices "A", "B" and optionally "X" (rows of
    numbers or of [re, im] pairs) or the scalars "a" and "b". Further keys such as "nu", "m" or
    "norm" are passed through unchanged.
    """

    def __init__(self, filepath: str):
        self.filepath = Path(filepath)

    def _load(self) -> t.Dict[str, t.Any]:

        if not self.filepath.exists():
            raise FileNotFoundError(f"File not found at path: {self.filepath}")

        try:
            with open(self.filepath, "r") as json_file:
                data = json.load(json_file)
        except json.JSONDecodeError as e:
            logger.error(f"Inputs file {self.filepath} is not valid JSON: {e}")
            raise e

        if not isinstance(data, dict):
            raise ValueError(f"Inputs file {self.filepath} must hold a JSON object")

        return decode_inputs(data)

    def _save(self, data: dict) -> None:
        raise NotImplementedError("Saving is not supported for MatrixInputsDataset.")

    def _describe(self) -> dict:
        return {"filepath": str(self.filepath)}
