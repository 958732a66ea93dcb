"""Dense complex matrices: validation, Hermitian spectral decomposition, fractional powers, singular values"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/20_matrix_core.ipynb.

# %% auto 0
__all__ = [
    "MAX_DIM",
    "TAU_HERM",
    "TAU_PSD",
    "TAU_RANK",
    "TAU_RECON",
    "TAU_UNITARY",
    "logger",
    "as_matrix",
    "SpectralDecomp",
    "SingularValueSet",
    "HermitianPSD",
    "eig_hermitian",
    "frac_power",
    "singular_values",
    "det",
    "trace",
    "adjoint",
    "matmul",
    "add",
    "sub",
    "scale",
]

# %% ../nbs/20_matrix_core.ipynb 3
import logging
import typing as t
from dataclasses import dataclass

import numpy as np

from .core import DomainError, NumericalError

logger = logging.getLogger(__name__)

MAX_DIM = 64
TAU_HERM = 1e-10
TAU_PSD = 1e-10
TAU_RANK = 1e-13
TAU_RECON = 1e-10
TAU_UNITARY = 1e-10


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def as_matrix(data: t.Any) -> np.ndarray:
    """
    Converts nested lists or arrays into a read-only complex128 matrix.

    Raises:
        DomainError: If the input is not two-dimensional, exceeds 64 rows/columns or has non-finite entries.
    """
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    if matrix.ndim != 2 or 0 in matrix.shape:
        raise DomainError(f"Expected a non-empty 2-D matrix, got shape {matrix.shape}")
    if max(matrix.shape) > MAX_DIM:
        raise DomainError(f"Matrix dimension {matrix.shape} exceeds the cap of {MAX_DIM}")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("Matrix has non-finite entries")
    return _frozen(matrix)


def _hs(matrix: np.ndarray) -> float:
    return float(np.linalg.norm(matrix, "fro"))


def _require_square(matrix: np.ndarray) -> None:
    if matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f"Expected a square matrix, got shape {matrix.shape}")


@dataclass(frozen=True)
class SpectralDecomp:
    """
    M = U diag(λ) U*.

    Attributes:
        eigenvalues (np.ndarray): Real eigenvalues in descending order.
        unitary (np.ndarray): Unitary matrix whose columns are the matching eigenvectors.
    """

    eigenvalues: np.ndarray
    unitary: np.ndarray

    def reconstruct(self, values: t.Optional[np.ndarray] = None) -> np.ndarray:
        values = self.eigenvalues if values is None else values
        return (self.unitary * values) @ self.unitary.conj().T


@dataclass(frozen=True)
class SingularValueSet:
    """Singular values s₁ >= s₂ >= ... >= 0."""

    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def eig_hermitian(matrix: t.Any) -> SpectralDecomp:
    """
    Spectral decomposition of a Hermitian matrix (LAPACK `heevd` through `numpy.linalg.eigh`).

    Raises:
        DomainError: If the matrix is not square or not Hermitian within TAU_HERM.
        NumericalError: If the solver fails or the reconstruction/unitarity checks are exceeded.
    """
    matrix = as_matrix(matrix)
    _require_square(matrix)

    size = _hs(matrix)
    if _hs(matrix - matrix.conj().T) > TAU_HERM * max(size, 1e-300):
        raise DomainError("Matrix is not Hermitian within tolerance")

    hermitian = (matrix + matrix.conj().T) / 2
    try:
        values, vectors = np.linalg.eigh(hermitian)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"Hermitian eigensolver failed: {e}") from e

    decomp = SpectralDecomp(
        eigenvalues=_frozen(values[::-1].copy()),
        unitary=_frozen(vectors[:, ::-1].copy()),
    )

    identity = np.eye(matrix.shape[0])
    if _hs(decomp.unitary.conj().T @ decomp.unitary - identity) > TAU_UNITARY:
        raise NumericalError("Eigenvector matrix is not unitary within tolerance")
    if _hs(decomp.reconstruct() - hermitian) > TAU_RECON * max(size, 1e-300):
        raise NumericalError("Spectral reconstruction error exceeds tolerance")
    return decomp


@dataclass(frozen=True)
class HermitianPSD:
    """
    A validated positive semidefinite matrix together with its spectral decomposition.

    Eigenvalues in [-TAU_PSD·λ_max, 0) are clamped to 0; anything more negative rejects the input.
    Eigenvalues with |λ| <= TAU_RANK·λ_max are reconstruction roundoff and are set to exactly 0.
    """

    matrix: np.ndarray
    decomp: SpectralDecomp

    @classmethod
    def from_matrix(cls, data: t.Any, tau_psd: float = TAU_PSD) -> "HermitianPSD":
        matrix = as_matrix(data)
        decomp = eig_hermitian(matrix)
        values = decomp.eigenvalues
        top = max(float(values[0]), 0.0)

        if float(values[-1]) < -tau_psd * top or (top == 0.0 and float(values[-1]) < 0.0):
            raise DomainError(f"Matrix is not positive semidefinite (λ_min = {values[-1]:.3e})")
        if float(values[-1]) < 0.0:
            logger.warning(f"Clamping eigenvalues down to {values[-1]:.3e} to 0")
        if float(values[-1]) <= TAU_RANK * top:
            snapped = np.where(values <= TAU_RANK * top, 0.0, values)
            decomp = SpectralDecomp(_frozen(snapped), decomp.unitary)

        hermitian = _frozen((matrix + matrix.conj().T) / 2)
        return cls(matrix=hermitian, decomp=decomp)

    @classmethod
    def diagonal(cls, values: t.Sequence[float]) -> "HermitianPSD":
        return cls.from_matrix(np.diag(np.asarray(values, dtype=float)))

    @classmethod
    def identity(cls, n: int) -> "HermitianPSD":
        return cls.from_matrix(np.eye(n))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.decomp.eigenvalues

    @property
    def is_positive_definite(self) -> bool:
        return bool(self.eigenvalues[-1] > 0.0)

    def power(self, exponent: float) -> np.ndarray:
        return frac_power(self, exponent)


def frac_power(a: HermitianPSD, exponent: float) -> np.ndarray:
    """
    U diag(λᵢ^t) U*, with 0^0 = 1 so that A^0 = I for singular A.

    Raises:
        DomainError: If t < 0 and A is singular.
    """
    exponent = float(exponent)
    if exponent < 0.0 and not a.is_positive_definite:
        raise DomainError("Negative powers of a singular matrix are undefined")
    if exponent == 1.0:
        return a.matrix

    powered = np.power(a.eigenvalues, exponent)
    return _frozen(a.decomp.reconstruct(powered))


def singular_values(matrix: t.Any) -> SingularValueSet:
    """
    Singular values in descending order (LAPACK `gesdd` through `numpy.linalg.svd`).
    """
    matrix = as_matrix(matrix)
    try:
        values = np.linalg.svd(matrix, compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"SVD failed: {e}") from e
    return SingularValueSet(_frozen(np.clip(values, 0.0, None)))


def det(matrix: t.Any) -> complex:
    """Determinant as sign·exp(log|det|) from an LU factorisation with partial pivoting."""
    matrix = as_matrix(matrix)
    _require_square(matrix)
    sign, logabs = np.linalg.slogdet(matrix)
    return complex(sign * np.exp(logabs))


def trace(matrix: t.Any) -> complex:
    matrix = as_matrix(matrix)
    _require_square(matrix)
    return complex(np.trace(matrix))


def adjoint(matrix: t.Any) -> np.ndarray:
    return _frozen(np.conj(as_matrix(matrix)).T.copy())


def matmul(*matrices: t.Any) -> np.ndarray:
    """Product of two or more matrices, left to right."""
    result = as_matrix(matrices[0])
    for other in matrices[1:]:
        other = as_matrix(other)
        if result.shape[1] != other.shape[0]:
            raise DomainError(f"Cannot multiply shapes {result.shape} and {other.shape}")
        result = result @ other
    return _frozen(np.asarray(result))


def _same_shape(left: np.ndarray, right: np.ndarray) -> None:
    if left.shape != right.shape:
        raise DomainError(f"Shape mismatch: {left.shape} vs {right.shape}")


def add(left: t.Any, right: t.Any) -> np.ndarray:
    left, right = as_matrix(left), as_matrix(right)
    _same_shape(left, right)
    return _frozen(left + right)


def sub(left: t.Any, right: t.Any) -> np.ndarray:
    left, right = as_matrix(left), as_matrix(right)
    _same_shape(left, right)
    return _frozen(left - right)


def scale(factor: complex, matrix: t.Any) -> np.ndarray:
    return _frozen(complex(factor) * as_matrix(matrix))
