"""The unitarily invariant norm family: Hilbert-Schmidt, trace, operator, Ky Fan k and Schatten p"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/25_norms.ipynb.

# %% auto 0
__all__ = ["NormKind", "NormSpec", "norm", "hs_norm_sq", "all_default_specs", "applicable_specs"]

# %% ../nbs/25_norms.ipynb 3
import math
import typing as t
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DomainError
from .matrix_core import as_matrix, singular_values


class NormKind(str, Enum):
    HILBERT_SCHMIDT = "hs"
    TRACE = "trace"
    OPERATOR = "op"
    KY_FAN = "kyfan"
    SCHATTEN = "schatten"


@dataclass(frozen=True)
class NormSpec:
    """
    Selector over the unitarily invariant norm family.

    Attributes:
        kind (NormKind): Which member of the family.
        param (float | None): k for Ky Fan (None means k = n, resolved when applied), p for Schatten.
    """

    kind: NormKind
    param: t.Optional[float] = None

    def __post_init__(self):
        if self.kind is NormKind.KY_FAN and self.param is not None:
            if self.param != int(self.param) or self.param < 1:
                raise DomainError(f"Ky Fan k must be an integer >= 1, got {self.param}")
        if self.kind is NormKind.SCHATTEN:
            if self.param is None or not math.isfinite(self.param) or self.param < 1:
                raise DomainError(f"Schatten p must be finite and >= 1, got {self.param}")

    @classmethod
    def hs(cls) -> "NormSpec":
        return cls(NormKind.HILBERT_SCHMIDT)

    @classmethod
    def trace(cls) -> "NormSpec":
        return cls(NormKind.TRACE)

    @classmethod
    def op(cls) -> "NormSpec":
        return cls(NormKind.OPERATOR)

    @classmethod
    def ky_fan(cls, k: t.Optional[int] = None) -> "NormSpec":
        return cls(NormKind.KY_FAN, None if k is None else int(k))

    @classmethod
    def schatten(cls, p: float) -> "NormSpec":
        return cls(NormKind.SCHATTEN, float(p))

    @classmethod
    def parse(cls, spec: "str | NormSpec") -> "NormSpec":
        """
        Parses "hs", "trace", "op", "kyfan:<k>" (or "kyfan:n") and "schatten:<p>".
        """
        if isinstance(spec, NormSpec):
            return spec
        name, _, arg = spec.strip().lower().partition(":")
        try:
            kind = NormKind(name)
        except ValueError as e:
            raise DomainError(f"Unknown norm '{spec}'") from e

        if kind is NormKind.KY_FAN:
            if not arg:
                raise DomainError("Ky Fan norm needs k, e.g. 'kyfan:2'")
            return cls.ky_fan(None if arg == "n" else _parse_number(arg, spec))
        if kind is NormKind.SCHATTEN:
            if not arg:
                raise DomainError("Schatten norm needs p, e.g. 'schatten:3'")
            return cls.schatten(_parse_number(arg, spec))
        if arg:
            raise DomainError(f"Norm '{name}' takes no parameter")
        return cls(kind)

    def __str__(self) -> str:
        if self.kind is NormKind.KY_FAN:
            return f"kyfan:{'n' if self.param is None else int(self.param)}"
        if self.kind is NormKind.SCHATTEN:
            p = self.param
            return f"schatten:{int(p) if p == int(p) else p}"
        return self.kind.value

    def applies_to(self, shape: t.Tuple[int, int]) -> bool:
        if self.kind is NormKind.KY_FAN and self.param is not None:
            return self.param <= min(shape)
        return True


def _parse_number(text: str, spec: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise DomainError(f"Invalid norm parameter in '{spec}'") from e
    return int(value) if value == int(value) else value


def hs_norm_sq(matrix: t.Any) -> float:
    """Squared Hilbert-Schmidt norm, Σ|mᵢⱼ|²."""
    matrix = as_matrix(matrix)
    return float(np.sum(matrix.real**2 + matrix.imag**2))


def norm(spec: "NormSpec | str", matrix: t.Any) -> float:
    """
    Evaluates a unitarily invariant norm.

    Raises:
        DomainError: For Ky Fan k larger than the smaller matrix dimension.
    """
    spec = NormSpec.parse(spec)
    matrix = as_matrix(matrix)

    if spec.kind is NormKind.HILBERT_SCHMIDT:
        return float(np.linalg.norm(matrix, "fro"))
    if not spec.applies_to(matrix.shape):
        raise DomainError(f"{spec} does not apply to a {matrix.shape} matrix")

    values = singular_values(matrix).values
    if spec.kind is NormKind.TRACE:
        return float(np.sum(values))
    if spec.kind is NormKind.OPERATOR:
        return float(values[0])
    if spec.kind is NormKind.KY_FAN:
        k = len(values) if spec.param is None else int(spec.param)
        return float(np.sum(values[:k]))

    top = float(values[0])
    if top == 0.0:
        return 0.0
    p = float(spec.param)
    return top * float(np.sum((values / top) ** p)) ** (1.0 / p)


def all_default_specs() -> t.List[NormSpec]:
    """
    HS, trace, operator, Ky Fan k ∈ {1, 2, n} and Schatten p ∈ {3, 4}.

    Schatten 1 and 2 coincide with the trace and HS norms and are not repeated.
    """
    return [
        NormSpec.hs(),
        NormSpec.trace(),
        NormSpec.op(),
        NormSpec.ky_fan(1),
        NormSpec.ky_fan(2),
        NormSpec.ky_fan(None),
        *(NormSpec.schatten(p) for p in (3, 4)),
    ]


def applicable_specs(specs: t.Iterable[NormSpec], shape: t.Tuple[int, int]) -> t.List[NormSpec]:
    return [spec for spec in specs if spec.applies_to(shape)]
