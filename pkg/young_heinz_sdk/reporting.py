"""Reports: per-check aggregation of verdicts, sweep curves, variant audits, JSON and CSV forms"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/45_reporting.ipynb.

# %% auto 0
__all__ = [
    "logger",
    "ENTRY_COLUMNS",
    "CURVE_COLUMNS",
    "AUDIT_COLUMNS",
    "MAX_WITNESSES",
    "encode_matrix",
    "decode_matrix",
    "encode_inputs",
    "decode_inputs",
    "json_safe",
    "ReportEntry",
    "CurvePoint",
    "AuditFinding",
    "Report",
    "summarize",
    "curve",
    "audit_finding",
    "new_report",
]

# %% ../nbs/45_reporting.ipynb 3
import hashlib
import json
import logging
import math
import typing as t
from dataclasses import asdict, dataclass, field

import numpy as np
import pandas as pd

from .core import Variant
from .inequality_suite import CheckSpec, Outcome, param_label
from .sampling import SampleConfig

logger = logging.getLogger(__name__)

ENTRY_COLUMNS = [
    "check_id",
    "variant",
    "param",
    "samples",
    "violations",
    "skipped",
    "min_slack",
    "nu_at_min",
    "argmin_digest",
    "tol",
]
CURVE_COLUMNS = ["check_id", "variant", "param", "nu", "samples", "violations", "min_slack", "argmin_digest"]
AUDIT_COLUMNS = ["check_id", "variant", "param", "verdict", "samples", "violations", "min_slack"]
MAX_WITNESSES = 5

_MATRIX_KEYS = ("A", "B", "X")
_SAMPLED_PREFIXES = ("seed:", "grid:")


# %% input codec


def encode_matrix(matrix: t.Any) -> t.List[t.List[t.List[float]]]:
    """Complex matrix as rows of [re, im] pairs."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def decode_matrix(data: t.Sequence) -> np.ndarray:
    """Inverse of `encode_matrix`; real entries (plain numbers) are accepted as well."""
    array = np.asarray(data, dtype=float)
    if array.ndim == 3 and array.shape[-1] == 2:
        return array[..., 0] + 1j * array[..., 1]
    if array.ndim == 2:
        return array.astype(np.complex128)
    raise ValueError(f"Matrix data must be rows of numbers or of [re, im] pairs, got shape {array.shape}")


def encode_inputs(inputs: t.Mapping[str, t.Any]) -> t.Dict[str, t.Any]:
    return {
        key: encode_matrix(value) if isinstance(value, np.ndarray) else value for key, value in inputs.items()
    }


def decode_inputs(data: t.Mapping[str, t.Any]) -> t.Dict[str, t.Any]:
    return {key: decode_matrix(value) if key in _MATRIX_KEYS else value for key, value in data.items()}


def json_safe(value: t.Any) -> t.Any:
    """Copy of `value` with non-finite floats replaced by None, so the JSON stays standard."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    return value


def _with_slack(data: t.Mapping[str, t.Any]) -> t.Dict[str, t.Any]:
    # null min_slack is a population with nothing evaluated
    data = dict(data)
    if data.get("min_slack") is None:
        data["min_slack"] = math.inf
    return data


# %% report parts


@dataclass
class ReportEntry:
    """
    Aggregate of one (check, variant, parameter) over a population.

    Attributes:
        violations (int): Samples whose verdict fails under `tol`.
        skipped (int): Samples where a φ-argument left the probe domain.
        min_slack (float): Smallest link slack over all samples (inf if nothing was evaluated).
        argmin_inputs (dict): Encoded inputs, ν and parameters that reproduce `min_slack`.
    """

    check_id: str
    variant: str
    param: str
    samples: int = 0
    violations: int = 0
    skipped: int = 0
    min_slack: float = math.inf
    nu_at_min: t.Optional[float] = None
    argmin_digest: str = ""
    argmin_inputs: t.Dict[str, t.Any] = field(default_factory=dict)
    tol: float = 0.0

    def row(self) -> t.Dict[str, t.Any]:
        return {column: getattr(self, column) for column in ENTRY_COLUMNS}


@dataclass
class CurvePoint:
    check_id: str
    variant: str
    param: str
    nu: float
    samples: int
    violations: int
    min_slack: float
    argmin_digest: str


@dataclass
class AuditFinding:
    """
    Adjudication of one reading: "universal" if no sample of the dense grid violates it, else "violated".
    """

    check_id: str
    variant: str
    param: str
    verdict: str
    samples: int
    violations: int
    min_slack: float
    witnesses: t.List[t.Dict[str, t.Any]] = field(default_factory=list)

    def row(self) -> t.Dict[str, t.Any]:
        return {column: getattr(self, column) for column in AUDIT_COLUMNS}


@dataclass
class Report:
    """
    Result of a suite, sweep or audit run.

    `run_id` is derived from the command and config, so reports of identical runs differ only in `created_at`.
    """

    run_id: str
    kind: str
    seed: int
    created_at: str
    config: t.Dict[str, t.Any] = field(default_factory=dict)
    entries: t.List[ReportEntry] = field(default_factory=list)
    curve: t.List[CurvePoint] = field(default_factory=list)
    audit: t.List[AuditFinding] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(entry.violations for entry in self.entries)

    def to_dict(self) -> t.Dict[str, t.Any]:
        """Plain dict form; an infinite min_slack (nothing evaluated) becomes None."""
        return json_safe(asdict(self))

    @classmethod
    def from_dict(cls, data: t.Mapping[str, t.Any]) -> "Report":
        return cls(
            run_id=data["run_id"],
            kind=data["kind"],
            seed=int(data["seed"]),
            created_at=data["created_at"],
            config=dict(data.get("config", {})),
            entries=[ReportEntry(**_with_slack(entry)) for entry in data.get("entries", [])],
            curve=[CurvePoint(**_with_slack(point)) for point in data.get("curve", [])],
            audit=[AuditFinding(**_with_slack(finding)) for finding in data.get("audit", [])],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def entries_frame(self) -> pd.DataFrame:
        return pd.DataFrame([entry.row() for entry in self.entries], columns=ENTRY_COLUMNS)

    def curve_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(point) for point in self.curve], columns=CURVE_COLUMNS)

    def audit_frame(self) -> pd.DataFrame:
        return pd.DataFrame([finding.row() for finding in self.audit], columns=AUDIT_COLUMNS)

    def frame(self) -> pd.DataFrame:
        """The table written for --format csv: the curve for sweeps, the findings for audits, else the entries."""
        if self.kind == "sweep":
            return self.curve_frame()
        if self.kind == "audit":
            return self.audit_frame()
        return self.entries_frame()


def new_report(kind: str, config: SampleConfig, created_at: t.Optional[str] = None, **extra: t.Any) -> Report:
    """An empty report whose run id hashes the kind, the config and any extra arguments."""
    payload = json.dumps({"kind": kind, "config": config.to_dict(), **extra}, sort_keys=True, default=str)
    run_id = hashlib.blake2b(payload.encode(), digest_size=8).hexdigest()
    return Report(
        run_id=run_id,
        kind=kind,
        seed=config.seed,
        created_at=created_at or pd.Timestamp.now(tz="UTC").isoformat(),
        config=config.to_dict(),
    )


# %% aggregation


def summarize(
    check: CheckSpec,
    variant: Variant,
    param: t.Mapping[str, t.Any],
    outcomes: t.Iterable[Outcome],
    tol: float,
) -> ReportEntry:
    """
    Folds outcomes into a ReportEntry. Ties on the minimum slack keep the first sample, so the entry
    does not depend on anything but the sample order.
    """
    entry = ReportEntry(check_id=check.check_id, variant=variant.value, param=param_label(param), tol=tol)

    for outcome in outcomes:
        if outcome.skipped:
            entry.skipped += 1
            continue
        verdict = outcome.verdict
        entry.samples += 1
        if not verdict.holds:
            entry.violations += 1
        if verdict.min_slack < entry.min_slack:
            entry.min_slack = verdict.min_slack
            entry.nu_at_min = verdict.nu
            entry.argmin_digest = f"{verdict.inputs_digest:016x}"
            entry.argmin_inputs = {**encode_inputs(verdict.inputs), **dict(param), "nu": verdict.nu}

    if entry.violations:
        logger.warning(
            f"{check.check_id} [{entry.variant}{', ' + entry.param if entry.param else ''}]: "
            f"{entry.violations} of {entry.samples} samples violate the chain (min slack {entry.min_slack:.3e})"
        )
    return entry


def curve(
    check: CheckSpec, variant: Variant, param: t.Mapping[str, t.Any], outcomes: t.Iterable[Outcome]
) -> t.List[CurvePoint]:
    """Per-ν minimum slack, one point per ν in ascending order."""
    by_nu: t.Dict[float, CurvePoint] = {}
    for outcome in outcomes:
        if outcome.skipped or outcome.nu is None:
            continue
        verdict = outcome.verdict
        point = by_nu.setdefault(
            outcome.nu,
            CurvePoint(check.check_id, variant.value, param_label(param), outcome.nu, 0, 0, math.inf, ""),
        )
        point.samples += 1
        point.violations += 0 if verdict.holds else 1
        if verdict.min_slack < point.min_slack:
            point.min_slack = verdict.min_slack
            point.argmin_digest = f"{verdict.inputs_digest:016x}"
    return [by_nu[nu] for nu in sorted(by_nu)]


def audit_finding(
    check: CheckSpec, variant: Variant, param: t.Mapping[str, t.Any], outcomes: t.Iterable[Outcome]
) -> AuditFinding:
    """
    Adjudicates one reading. Witnesses are the worst violation per sample: structured cases first in
    population order, then seeded and grid samples worst-first, at most MAX_WITNESSES.
    """
    finding = AuditFinding(check.check_id, variant.value, param_label(param), "universal", 0, 0, math.inf)
    worst: t.Dict[str, t.Dict[str, t.Any]] = {}
    for outcome in outcomes:
        if outcome.skipped:
            continue
        verdict = outcome.verdict
        finding.samples += 1
        finding.min_slack = min(finding.min_slack, verdict.min_slack)
        if verdict.holds:
            continue
        finding.violations += 1
        known = worst.get(outcome.label)
        if known is None or verdict.min_slack < known["min_slack"]:
            worst[outcome.label] = {
                "label": outcome.label,
                "nu": verdict.nu,
                "min_slack": verdict.min_slack,
                "inputs": encode_inputs(verdict.inputs),
            }

    structured = [w for label, w in worst.items() if not label.startswith(_SAMPLED_PREFIXES)]
    sampled = sorted(
        (w for label, w in worst.items() if label.startswith(_SAMPLED_PREFIXES)), key=lambda w: w["min_slack"]
    )
    finding.witnesses = (structured + sampled)[:MAX_WITNESSES]
    if finding.violations:
        finding.verdict = "violated"
    return finding
