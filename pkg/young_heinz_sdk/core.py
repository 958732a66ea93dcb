"""Shared types: errors, variants, verdicts and the slack/tolerance policy"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/00_core.ipynb.

# %% auto 0
__all__ = [
    "DomainError",
    "NumericalError",
    "UsageError",
    "ProbeDomainError",
    "Variant",
    "SCALAR_TOL",
    "MATRIX_TOL",
    "Verdict",
    "link_slack",
    "link_holds",
    "make_verdict",
    "inputs_digest",
    "signed_pow",
]

# %% ../nbs/00_core.ipynb 3
import hashlib
import math
import typing as t
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

SCALAR_TOL = 1e-12
MATRIX_TOL = 1e-8


class DomainError(ValueError):
    """A precondition of an operation is violated (argument out of range, bad shape, ...)."""


class NumericalError(RuntimeError):
    """A numerical routine failed or its post-conditions could not be met."""


class UsageError(ValueError):
    """Invalid command-line usage, e.g. an unknown check id."""


class ProbeDomainError(DomainError):
    """An argument left the domain of a convex probe φ; suite runners count the sample as skipped."""


class Variant(str, Enum):
    """
    Reading of a formula whose typeset form is suspect.

    PRINTED evaluates the formula exactly as typeset, CORRECTED the reading that
    follows from the derivation. DERIVED_FROM_THM22 is the algebraic expansion
    of the squared Young bounds used by the quadratic gap check.
    """

    PRINTED = "printed"
    CORRECTED = "corrected"
    DERIVED_FROM_THM22 = "derived"

    @classmethod
    def parse(cls, value: "str | Variant") -> "Variant":
        if isinstance(value, Variant):
            return value
        try:
            return cls(value.lower())
        except ValueError as e:
            raise UsageError(f"Unknown variant '{value}'") from e


def link_slack(lower: float, upper: float) -> float:
    """Slack of one link `lower <= upper` (nonnegative means the link holds)."""
    return float(upper) - float(lower)


def link_holds(lower: float, upper: float, tol: float, magnitude: float = 0.0) -> bool:
    """
    A link passes iff lower <= upper + tol * max(1, |lower|, |upper|, magnitude).

    `magnitude` is the size of the terms the link values are differences of.
    """
    scale = max(1.0, abs(lower), abs(upper), abs(magnitude))
    return link_slack(lower, upper) >= -tol * scale


@dataclass(frozen=True)
class Verdict:
    """
    One evaluation of an inequality chain.

    Attributes:
        check_id (str): Stable id of the check, e.g. "thm313".
        variant (Variant): Reading of the formula that was evaluated.
        nu (float | None): The ν the chain was evaluated at.
        inputs_digest (int): 64-bit digest of the inputs.
        chain (list): (label, value) pairs in ascending order; consecutive pairs are the links.
        slacks (list): Consecutive differences of the chain values.
        holds (bool): True iff every link passes under `tol_used`.
        tol_used (float): Relative tolerance used for the links.
        inputs (dict): Serialisable inputs that reproduce the verdict.
    """

    check_id: str
    variant: Variant
    nu: t.Optional[float]
    inputs_digest: int
    chain: t.List[t.Tuple[str, float]]
    slacks: t.List[float]
    holds: bool
    tol_used: float
    inputs: t.Dict[str, t.Any] = field(default_factory=dict, compare=False)

    @property
    def min_slack(self) -> float:
        return min(self.slacks) if self.slacks else math.inf

    def values(self) -> t.List[float]:
        return [value for _, value in self.chain]

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {
            "check_id": self.check_id,
            "variant": self.variant.value,
            "nu": self.nu,
            "inputs_digest": f"{self.inputs_digest:016x}",
            "chain": [[label, value] for label, value in self.chain],
            "slacks": list(self.slacks),
            "holds": self.holds,
            "tol_used": self.tol_used,
        }


def make_verdict(
    check_id: str,
    variant: Variant,
    chain: t.Sequence[t.Tuple[str, float]],
    tol: float,
    nu: t.Optional[float] = None,
    inputs: t.Optional[t.Dict[str, t.Any]] = None,
    digest: t.Optional[int] = None,
    side_links: t.Sequence[t.Tuple[str, float, float]] = (),
    magnitude: float = 0.0,
) -> Verdict:
    """
    Builds a Verdict from an ascending chain of (label, value) pairs.

    Args:
        side_links: Additional (label, lower, upper) links that must hold as well,
            e.g. the ordering hypotheses of a sandwich. Their slacks follow the chain slacks.
        magnitude: Size of the largest term the chain values are differences of; widens the
            tolerance scale accordingly.
    """
    chain = [(label, float(value)) for label, value in chain]
    if len(chain) < 2:
        raise ValueError("A chain needs at least two members")
    if any(not math.isfinite(value) for _, value in chain):
        raise NumericalError(f"Non-finite value in chain of '{check_id}': {chain}")

    values = [value for _, value in chain]
    links = list(zip(values, values[1:])) + [(lo, hi) for _, lo, hi in side_links]
    slacks = [link_slack(lo, hi) for lo, hi in links]
    holds = all(link_holds(lo, hi, tol, magnitude) for lo, hi in links)

    return Verdict(
        check_id=check_id,
        variant=variant,
        nu=nu,
        inputs_digest=digest if digest is not None else inputs_digest(nu, **(inputs or {})),
        chain=chain,
        slacks=slacks,
        holds=holds,
        tol_used=tol,
        inputs=inputs or {},
    )


def inputs_digest(nu: t.Optional[float] = None, **inputs: t.Any) -> int:
    """
    64-bit blake2b digest over ν and the named inputs (scalars or arrays), in key order.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(repr(nu).encode())
    for key in sorted(inputs):
        h.update(key.encode())
        value = inputs[key]
        if isinstance(value, np.ndarray):
            h.update(np.ascontiguousarray(value, dtype=np.complex128).tobytes())
        else:
            h.update(repr(value).encode())
    return int.from_bytes(h.digest(), "big")


def signed_pow(base: float, m: int) -> float:
    """Integer power of a possibly negative real; odd m keeps the sign."""
    return float(base) ** int(m)
