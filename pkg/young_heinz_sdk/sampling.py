"""Deterministic seeded generators for scalars, PSD matrices, arbitrary matrices, structured cases and ν grids"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/30_sampling.ipynb.

# %% auto 0
__all__ = [
    "logger",
    "DEFAULT_SEED",
    "default_nu_grid",
    "parse_nu_grid",
    "SampleConfig",
    "load_config_file",
    "mix",
    "generator",
    "gen_scalar",
    "gen_scalars",
    "gen_matrix",
    "gen_psd",
    "MatrixSample",
    "matrix_samples",
    "seeded_matrix_samples",
    "tight_scalar_cases",
    "scalar_samples",
    "log_grid_pairs",
    "StructuredCase",
    "structured_cases",
]

# %% ../nbs/30_sampling.ipynb 3
import dataclasses
import logging
import typing as t
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from kedro.config import OmegaConfigLoader

from .core import MATRIX_TOL, DomainError
from .matrix_core import MAX_DIM, HermitianPSD, as_matrix

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20170101
_MASK64 = (1 << 64) - 1


def default_nu_grid() -> t.List[float]:
    """The 99-point grid 0.01, 0.02, ..., 0.99 (0.25, 0.5 and 0.75 are exact)."""
    return [k / 100 for k in range(1, 100)]


def parse_nu_grid(text: str) -> t.List[float]:
    """
    Parses a comma list ("0.1,0.25,0.5") or an inclusive range "lo:hi:steps".
    """
    text = text.strip()
    try:
        if ":" in text:
            lo, hi, steps = text.split(":")
            grid = [float(v) for v in np.linspace(float(lo), float(hi), int(steps))]
        else:
            grid = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise DomainError(f"Invalid ν grid '{text}'") from e

    if not grid or any(not 0.0 <= v <= 1.0 for v in grid):
        raise DomainError(f"ν grid must be non-empty and inside [0, 1], got '{text}'")
    return grid


@dataclass
class SampleConfig:
    """
    Everything that determines a sample population and how it is checked.

    Attributes:
        seed (int): 64-bit master seed.
        n (int): Matrix dimension for seeded samples.
        count (int): Number of seeded matrix samples per check.
        scalar_count (int): Number of (a, b) samples per scalar check.
        scalar_range (tuple): (lo, hi) of the log-uniform scalar distribution.
        nu_grid (list): ν values; sample i uses nu_grid[i % len(nu_grid)].
        include_structured (bool): Whether structured edge cases are checked as well.
        tol (float): Relative tolerance for matrix checks.
        scalar_tol (float): Relative tolerance for scalar checks over the log-uniform population.
        norms (list): Norm spec strings for the norm-quantified checks.
        m_values (list): Powers m for the power sandwich and the trace, determinant and norm power refinements.
        variant (str): "corrected" (pinned readings) or "printed".
        checks (list | None): Check ids to run; None runs all.
        audit_grid (int): Side of the (a, b) log grid used by audits.
        audit_count (int): Seeded matrix samples used by audits.
    """

    seed: int = DEFAULT_SEED
    n: int = 4
    count: int = 1000
    scalar_count: int = 100_000
    scalar_range: t.Tuple[float, float] = (1e-3, 1e3)
    nu_grid: t.List[float] = field(default_factory=default_nu_grid)
    include_structured: bool = True
    tol: float = MATRIX_TOL
    scalar_tol: float = 1e-9
    norms: t.List[str] = field(
        default_factory=lambda: ["hs", "trace", "op", "kyfan:1", "kyfan:2", "kyfan:n", "schatten:3", "schatten:4"]
    )
    m_values: t.List[int] = field(default_factory=lambda: [1, 2, 3])
    variant: str = "corrected"
    checks: t.Optional[t.List[str]] = None
    audit_grid: int = 200
    audit_count: int = 500

    def __post_init__(self):
        self.seed = int(self.seed) & _MASK64
        self.scalar_range = tuple(float(v) for v in self.scalar_range)
        if isinstance(self.nu_grid, str):
            self.nu_grid = parse_nu_grid(self.nu_grid)
        self.nu_grid = [float(v) for v in self.nu_grid]
        self.m_values = [int(m) for m in self.m_values]

        lo, hi = self.scalar_range
        if not 0.0 < lo <= hi:
            raise DomainError(f"scalar_range must satisfy 0 < lo <= hi, got {self.scalar_range}")
        if not 1 <= int(self.n) <= MAX_DIM:
            raise DomainError(f"n must lie in [1, {MAX_DIM}], got {self.n}")
        if not self.nu_grid or any(not 0.0 <= v <= 1.0 for v in self.nu_grid):
            raise DomainError("nu_grid must be non-empty and inside [0, 1]")
        if self.count < 0 or self.scalar_count < 0:
            raise DomainError("Sample counts must be nonnegative")

    @classmethod
    def from_dict(cls, values: t.Mapping[str, t.Any]) -> "SampleConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise DomainError(f"Unknown config keys: {sorted(unknown)}")
        return cls(**{key.replace("-", "_"): value for key, value in values.items()})

    @classmethod
    def from_file(cls, path: "str | Path", **overrides: t.Any) -> "SampleConfig":
        """Loads a config file; non-None overrides (command-line flags) win over file values."""
        values = {key.replace("-", "_"): value for key, value in load_config_file(path).items()}
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.from_dict(values)

    def to_dict(self) -> t.Dict[str, t.Any]:
        values = dataclasses.asdict(self)
        values["scalar_range"] = list(self.scalar_range)
        return values

    def replace(self, **changes: t.Any) -> "SampleConfig":
        return dataclasses.replace(self, **changes)


def load_config_file(path: "str | Path") -> t.Dict[str, t.Any]:
    """
    Loads a JSON or YAML harness config file through kedro's `OmegaConfigLoader`.

    Returns:
        dict: The top-level mapping of the file.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Config file not found at path: {path}")

    conf_loader = OmegaConfigLoader(
        conf_source=str(path.parent),
        base_env="",
        default_run_env="",
        config_patterns={"harness": [path.name]},
    )
    config = conf_loader["harness"]
    logger.info(f"Loaded harness config from {path}")
    return dict(config)


# %% seeds


def mix(seed: int, index: int) -> int:
    """
    64-bit sub-seed for sample `index`: the first word of `SeedSequence(seed, spawn_key=(index,))`.

    SeedSequence hashing is specified bit-exactly by numpy, so sub-seeds are identical across platforms.
    """
    sequence = np.random.SeedSequence(int(seed) & _MASK64, spawn_key=(int(index),))
    return int(sequence.generate_state(1, np.uint64)[0])


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & _MASK64)))


def gen_scalar(seed: int, scalar_range: t.Tuple[float, float] = (1e-3, 1e3)) -> float:
    """One log-uniform draw on [lo, hi]."""
    return float(gen_scalars(seed, 1, scalar_range)[0])


def gen_scalars(seed: int, count: int, scalar_range: t.Tuple[float, float] = (1e-3, 1e3)) -> np.ndarray:
    lo, hi = scalar_range
    if not 0.0 < lo <= hi:
        raise DomainError(f"Log-uniform range needs 0 < lo <= hi, got {scalar_range}")
    exponents = generator(seed).uniform(np.log(lo), np.log(hi), size=count)
    return np.exp(exponents)


def gen_matrix(seed: int, rows: int, cols: int) -> np.ndarray:
    """rows x cols matrix of complex standard normals (real and imaginary parts of variance 1/2)."""
    if not (1 <= rows <= MAX_DIM and 1 <= cols <= MAX_DIM):
        raise DomainError(f"Matrix dimensions must lie in [1, {MAX_DIM}], got {rows}x{cols}")
    rng = generator(seed)
    parts = rng.standard_normal(size=(2, rows, cols))
    return as_matrix((parts[0] + 1j * parts[1]) / np.sqrt(2.0))


def gen_psd(seed: int, n: int) -> HermitianPSD:
    """Wishart-type sample G G* for G = gen_matrix(seed, n, n); positive definite with probability 1."""
    g = gen_matrix(seed, n, n)
    return HermitianPSD.from_matrix(g @ g.conj().T)


# %% sample streams


@dataclass(frozen=True)
class MatrixSample:
    """
    One seeded matrix sample.

    Attributes:
        label (str): "seed:<index>" for seeded samples, the case name for structured ones.
        a (HermitianPSD), b (HermitianPSD): The PSD pair.
        x (np.ndarray): The arbitrary middle matrix.
        nu (float | None): ν pinned by the case, or None to take it from the grid.
    """

    label: str
    a: HermitianPSD
    b: HermitianPSD
    x: np.ndarray
    nu: t.Optional[float] = None


def matrix_samples(config: SampleConfig) -> t.Iterator[t.Tuple[MatrixSample, float]]:
    """
    Yields (sample, ν). Structured cases come first, then `count` seeded samples; seeded sample i
    draws A, B, X from mix(mix(seed, i), 0..2) and uses ν = nu_grid[i % len(nu_grid)].
    """
    grid = config.nu_grid
    if config.include_structured:
        for j, case in enumerate(structured_cases(config.n)):
            yield case, case.nu if case.nu is not None else grid[j % len(grid)]
    yield from zip(seeded_matrix_samples(config.seed, config.n, config.count), _cycle(grid, config.count))


def seeded_matrix_samples(seed: int, n: int, count: int) -> t.Iterator[MatrixSample]:
    for i in range(count):
        sub = mix(seed, i)
        yield MatrixSample(
            label=f"seed:{i}",
            a=gen_psd(mix(sub, 0), n),
            b=gen_psd(mix(sub, 1), n),
            x=gen_matrix(mix(sub, 2), n, n),
        )


def _cycle(grid: t.Sequence[float], count: int) -> t.Iterator[float]:
    return (grid[i % len(grid)] for i in range(count))


def tight_scalar_cases() -> t.List[t.Tuple[str, float, float, float]]:
    """(label, a, b, ν) cases where scalar chains are tight or nearly so."""
    cases = [(f"equal:{a}:{nu}", a, a, nu) for a in (1e-3, 1.0, 7.0, 1e3) for nu in (0.25, 0.5, 0.75)]
    cases += [
        ("tight:1,1e-12,0.3", 1.0, 1e-12, 0.3),
        ("tight:16,1,0.25", 16.0, 1.0, 0.25),
        ("tight:4,1,0.25", 4.0, 1.0, 0.25),
    ]
    return cases


def scalar_samples(config: SampleConfig) -> t.Iterator[t.Tuple[str, float, float, float]]:
    """
    Yields (label, a, b, ν): the tight scalar cases first (when structured cases are on), then
    `scalar_count` log-uniform pairs with ν = nu_grid[i % len(nu_grid)].
    """
    if config.include_structured:
        yield from tight_scalar_cases()

    a_values = gen_scalars(mix(config.seed, 0), config.scalar_count, config.scalar_range)
    b_values = gen_scalars(mix(config.seed, 1), config.scalar_count, config.scalar_range)
    for i, (a, b, nu) in enumerate(zip(a_values, b_values, _cycle(config.nu_grid, config.scalar_count))):
        yield f"seed:{i}", float(a), float(b), nu


def log_grid_pairs(size: int, scalar_range: t.Tuple[float, float] = (1e-3, 1e3)) -> t.Iterator[t.Tuple[str, float, float]]:
    """All (a, b) on a size x size logarithmic grid over the range."""
    lo, hi = scalar_range
    if not 0.0 < lo <= hi:
        raise DomainError(f"Log grid range needs 0 < lo <= hi, got {scalar_range}")
    points = [float(v) for v in np.geomspace(lo, hi, size)]
    for i, a in enumerate(points):
        for j, b in enumerate(points):
            yield f"grid:{i},{j}", a, b


# %% structured cases


StructuredCase = MatrixSample


def structured_cases(n: int) -> t.List[StructuredCase]:
    """
    Edge cases: 1x1 embeddings of the tight scalar cases (with their ν pinned), then for dimension n
    an identity pair, equal pairs, commuting diagonal pairs, a rank-deficient PSD and a near-singular
    PSD (λ_min = 1e-12·λ_max).
    """
    if not 1 <= n <= MAX_DIM:
        raise DomainError(f"n must lie in [1, {MAX_DIM}], got {n}")

    one, unit = HermitianPSD.identity(1), as_matrix([[1.0]])
    cases = [
        StructuredCase("scalar:identity", one, one, unit, 0.3),
        StructuredCase("scalar:a=b", HermitianPSD.diagonal([2.0]), HermitianPSD.diagonal([2.0]), unit, 0.3),
        StructuredCase("scalar:1,0+,0.3", one, HermitianPSD.diagonal([1e-15]), unit, 0.3),
    ]
    cases += [
        StructuredCase(f"scalar:4,1,{nu}", HermitianPSD.diagonal([4.0]), one, unit, nu) for nu in (0.25, 0.5, 0.75)
    ]

    identity = HermitianPSD.identity(n)
    eye = as_matrix(np.eye(n))
    base = gen_psd(mix(DEFAULT_SEED, n), n)
    x = gen_matrix(mix(DEFAULT_SEED, n + MAX_DIM), n, n)

    ramp = np.arange(1, n + 1, dtype=float)
    decomp = base.decomp
    rank_deficient = decomp.reconstruct(np.append(decomp.eigenvalues[:-1], 0.0))
    near_values = decomp.eigenvalues.copy()
    near_values[-1] = 1e-12 * near_values[0]
    near_singular = decomp.reconstruct(near_values)

    cases += [
        StructuredCase("identity", identity, identity, eye),
        StructuredCase("equal-pair", base, base, eye),
        StructuredCase("equal-pair-x", base, base, x),
        StructuredCase("diagonal", HermitianPSD.diagonal(ramp), HermitianPSD.diagonal(ramp[::-1]), eye),
        StructuredCase("diagonal-x", HermitianPSD.diagonal(ramp**2), HermitianPSD.diagonal(ramp), x),
        StructuredCase("rank-deficient", HermitianPSD.from_matrix(rank_deficient), base, x),
        StructuredCase("near-singular", HermitianPSD.from_matrix(near_singular), base, x),
    ]
    return cases
