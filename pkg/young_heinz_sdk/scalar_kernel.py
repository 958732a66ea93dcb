"""Scalar Young and Heinz bounds: ν-constants, the S₁ refinement term and the convex-function sandwiches"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/10_scalar_kernel.ipynb.

# %% auto 0
__all__ = [
    "NuContext",
    "nu_context",
    "Chain",
    "s1",
    "s1_refining",
    "young_refined",
    "young_squared",
    "quadratic_gap_bounds",
    "heinz_mean",
    "ProbeKind",
    "ConvexProbe",
    "default_probes",
    "verify_probe",
    "Sandwich",
    "sandwich_hypotheses",
    "phi_sandwich",
    "heinz_sandwich",
    "lemma312_gap",
    "squared_young_refined",
]

# %% ../nbs/10_scalar_kernel.ipynb 3
import math
import typing as t
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import DomainError, ProbeDomainError, Variant

# %% ν-constants


@dataclass(frozen=True)
class NuContext:
    """
    All constants derived from ν.

    Attributes:
        nu (float): The weight ν.
        r (float): min{ν, 1-ν}.
        big_r (float): max{ν, 1-ν}.
        r0 (float): min{2r, 1-2r}.
        k2 (int): floor(2ν).
        j4 (int): floor(4ν), the index of the S₁ coefficient.
    """

    nu: float
    r: float
    big_r: float
    r0: float
    k2: int
    j4: int

    @property
    def lower_half(self) -> bool:
        return self.nu <= 0.5


def nu_context(nu: float, allow_zero: bool = False) -> NuContext:
    """
    Computes the ν-constants for 0 < ν <= 1 (0 <= ν <= 1 with `allow_zero`).

    2ν and 4ν are exact in binary floating point, so the floors are taken of the exact products.
    """
    nu = float(nu)
    lo_ok = nu >= 0.0 if allow_zero else nu > 0.0
    if not (lo_ok and nu <= 1.0) or math.isnan(nu):
        raise DomainError(f"ν must lie in {'[0' if allow_zero else '(0'}, 1], got {nu}")

    r = min(nu, 1.0 - nu)
    return NuContext(
        nu=nu,
        r=r,
        big_r=max(nu, 1.0 - nu),
        r0=min(2.0 * r, 1.0 - 2.0 * r),
        k2=math.floor(2.0 * nu),
        j4=math.floor(4.0 * nu),
    )


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0 or not math.isfinite(value):
            raise DomainError(f"{name} must be a positive finite number, got {value}")


def _require_nonnegative(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0.0 or not math.isfinite(value):
            raise DomainError(f"{name} must be a nonnegative finite number, got {value}")


# %% chains


@dataclass(frozen=True)
class Chain:
    """
    An ascending chain of bound values, `values[0] <= values[1] <= ...` when the inequality holds.
    """

    labels: t.Tuple[str, ...]
    values: t.Tuple[float, ...]

    def __getitem__(self, label: str) -> float:
        return self.values[self.labels.index(label)]

    def pairs(self) -> t.List[t.Tuple[str, float]]:
        return list(zip(self.labels, self.values))

    def slacks(self) -> t.List[float]:
        return [hi - lo for lo, hi in zip(self.values, self.values[1:])]

    def is_ordered(self, tol: float) -> bool:
        return all(
            hi - lo >= -tol * max(1.0, abs(lo), abs(hi))
            for lo, hi in zip(self.values, self.values[1:])
        )


def _chain(**members: float) -> Chain:
    return Chain(tuple(members), tuple(float(v) for v in members.values()))


# %% S₁


def s1(nu: float, a: float, b: float) -> float:
    """
    The refinement term S₁(ν) as typeset:

        ((-1)^j4 2ν + (-1)^(j4+1) floor((j4+1)/2)) * (⁴√(b^(2-k2) a^k2) - ⁴√(a^(k2+1) b^(1-k2)))²

    with j4 = floor(4ν) and k2 = floor(2ν). The radical difference is b-sided for ν < 1/2 and
    a-sided for ν > 1/2, which is the side the reverse Young bound needs; see `s1_refining`.
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    j4, k2 = ctx.j4, ctx.k2

    coefficient = (-1) ** j4 * 2.0 * ctx.nu + (-1) ** (j4 + 1) * ((j4 + 1) // 2)
    left = b ** ((2 - k2) / 4.0) * a ** (k2 / 4.0)
    right = a ** ((k2 + 1) / 4.0) * b ** ((1 - k2) / 4.0)
    return coefficient * (left - right) ** 2


def s1_refining(nu: float, a: float, b: float) -> float:
    """S₁ with a and b interchanged: the term that refines (1−ν)a + νb ≥ a^(1−ν) b^ν."""
    return s1(nu, b, a)


def _s1_sides(nu: float, a: float, b: float, variant: Variant) -> t.Tuple[float, float]:
    """(term added to the lower bound, term subtracted from the upper bound)."""
    variant = Variant.parse(variant)
    if variant is Variant.PRINTED:
        term = s1(nu, a, b)
        return term, term
    if variant is Variant.CORRECTED:
        return s1_refining(nu, a, b), s1(nu, a, b)
    raise DomainError(f"Variant {variant.value} is not defined for S₁ chains")


# %% Young bounds


def young_refined(a: float, b: float, nu: float, variant: Variant = Variant.CORRECTED) -> Chain:
    """
    Refined Young inequality and its reverse as one chain:

        a^(1-ν) b^ν + S₁ + r(√a-√b)²  <=  (1-ν)a + νb  <=  a^(1-ν) b^ν + R(√a-√b)² - S₁
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    lower_s, upper_s = _s1_sides(nu, a, b, variant)

    geo = a ** (1.0 - ctx.nu) * b**ctx.nu
    sq = (math.sqrt(a) - math.sqrt(b)) ** 2
    return _chain(
        y_plus=geo + lower_s + ctx.r * sq,
        x=(1.0 - ctx.nu) * a + ctx.nu * b,
        upper=geo + ctx.big_r * sq - upper_s,
    )


def young_squared(a: float, b: float, nu: float, variant: Variant = Variant.CORRECTED) -> Chain:
    """
    Refined lower and upper bounds on ((1-ν)a + νb)² around (a^(1-ν) b^ν)².

    PRINTED uses the typeset S₁ at (a, b) and (1-ν)² in the upper bound. CORRECTED evaluates the
    S₁ terms at (a², b²), each on its own side, and uses R² in the upper bound so the chain holds
    on both halves of (0, 1).
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    if ctx.nu >= 1.0:
        raise DomainError(f"ν must lie in (0, 1), got {nu}")

    variant = Variant.parse(variant)
    if variant is Variant.PRINTED:
        lower_s, upper_s = _s1_sides(nu, a, b, variant)
        upper_coef = (1.0 - ctx.nu) ** 2
    else:
        lower_s, upper_s = _s1_sides(nu, a * a, b * b, variant)
        upper_coef = ctx.big_r**2

    geo_sq = (a ** (1.0 - ctx.nu) * b**ctx.nu) ** 2
    diff_sq = (a - b) ** 2
    return _chain(
        lower=geo_sq + ctx.r**2 * diff_sq + lower_s,
        middle=((1.0 - ctx.nu) * a + ctx.nu * b) ** 2,
        upper=geo_sq + upper_coef * diff_sq - upper_s,
    )


def quadratic_gap_bounds(
    a: float, b: float, nu: float, variant: Variant = Variant.DERIVED_FROM_THM22
) -> Chain:
    """
    Bounds on ((1-ν)a + νb)² - (a^(1-ν) b^ν)², branch selected by ν <= 1/2.

    PRINTED evaluates the typeset bounds term by term; DERIVED_FROM_THM22 subtracts (a^(1-ν) b^ν)² from
    the CORRECTED squared Young chain.
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    if ctx.nu >= 1.0:
        raise DomainError(f"ν must lie in (0, 1), got {nu}")

    nu, r0 = ctx.nu, ctx.r0
    gap = ((1.0 - nu) * a + nu * b) ** 2 - (a ** (1.0 - nu) * b**nu) ** 2

    variant = Variant.parse(variant)
    if variant is Variant.PRINTED:
        sq_sum, root = a * a + b * b, math.sqrt(a * b)
        a_side = nu**2 * sq_sum - (2 * nu**2 * a * b + 2 * r0 * a * root - r0 * (a * b + a * a))
        if ctx.lower_half:
            lower = a_side
            upper = (1 - nu) ** 2 * sq_sum - (
                2 * (1 - nu) ** 2 * a * b + r0 * b * root - r0 * (a * b + b * b)
            )
        else:
            lower = (1 - nu) ** 2 * sq_sum - (
                2 * (1 - nu) ** 2 * a * b + 2 * r0 * b * root - r0 * (a * b + b * b)
            )
            upper = a_side
    elif variant is Variant.DERIVED_FROM_THM22:
        squared = young_squared(a, b, nu, Variant.CORRECTED)
        geo_sq = (a ** (1.0 - nu) * b**nu) ** 2
        lower, upper = squared["lower"] - geo_sq, squared["upper"] - geo_sq
    else:
        raise DomainError(f"Variant {variant.value} is not defined for the quadratic gap")

    return _chain(lower=lower, gap=gap, upper=upper)


def heinz_mean(a: float, b: float, nu: float) -> float:
    """H_ν(a, b) = (a^(1-ν) b^ν + a^ν b^(1-ν)) / 2, for 0 <= ν <= 1."""
    _require_positive(a=a, b=b)
    nu = nu_context(nu, allow_zero=True).nu
    return (a ** (1.0 - nu) * b**nu + a**nu * b ** (1.0 - nu)) / 2.0


# %% convex probes


class ProbeKind(str, Enum):
    POWER_M = "power"
    POWER_HALF_M = "power_half"
    EXP = "exp"


@dataclass(frozen=True)
class ConvexProbe:
    """
    A strictly increasing convex function φ on a closed interval of nonnegative reals.

    Arguments that fall below the domain by less than a rounding margin are clamped onto it.
    """

    kind: ProbeKind
    m: int = 1
    domain: t.Tuple[float, float] = (0.0, math.inf)

    def __post_init__(self):
        if self.kind is ProbeKind.POWER_M and self.m < 1:
            raise DomainError(f"PowerM needs m >= 1, got {self.m}")
        if self.kind is ProbeKind.POWER_HALF_M and self.m < 2:
            raise DomainError(f"PowerHalfM needs m >= 2, got {self.m}")

    @classmethod
    def power(cls, m: int) -> "ConvexProbe":
        return cls(ProbeKind.POWER_M, int(m))

    @classmethod
    def power_half(cls, m: int) -> "ConvexProbe":
        return cls(ProbeKind.POWER_HALF_M, int(m))

    @classmethod
    def exp(cls) -> "ConvexProbe":
        # beyond ~700 exp overflows double precision
        return cls(ProbeKind.EXP, 1, (0.0, 700.0))

    @classmethod
    def parse(cls, spec: str) -> "ConvexProbe":
        """Parses "power:<m>", "power_half:<m>" or "exp"."""
        name, _, arg = spec.strip().lower().partition(":")
        try:
            if name == "exp":
                return cls.exp()
            if name == ProbeKind.POWER_M.value:
                return cls.power(int(arg or 1))
            if name == ProbeKind.POWER_HALF_M.value:
                return cls.power_half(int(arg or 2))
        except ValueError as e:
            raise DomainError(f"Invalid probe spec '{spec}'") from e
        raise DomainError(f"Unknown probe '{spec}'")

    @property
    def name(self) -> str:
        if self.kind is ProbeKind.EXP:
            return "exp"
        return f"{self.kind.value}:{self.m}"

    def __call__(self, x: float) -> float:
        lo, hi = self.domain
        margin = 1e-12 * max(1.0, abs(x))
        if x < lo - margin or x > hi + margin:
            raise ProbeDomainError(f"Argument {x} outside the domain {self.domain} of {self.name}")
        x = min(max(x, lo), hi)

        if self.kind is ProbeKind.POWER_M:
            return x**self.m
        if self.kind is ProbeKind.POWER_HALF_M:
            return x ** (self.m / 2.0)
        return math.exp(x)


def default_probes() -> t.List[ConvexProbe]:
    return [
        ConvexProbe.power(1),
        ConvexProbe.power(2),
        ConvexProbe.power(3),
        ConvexProbe.power_half(2),
        ConvexProbe.power_half(3),
        ConvexProbe.exp(),
    ]


def verify_probe(probe: ConvexProbe, samples: int = 1000, seed: int = 0, tol: float = 1e-12) -> bool:
    """
    Numerical strict-increase and convexity test on sampled triples x < y < z of the probe domain.

    Unbounded domains are sampled on [lo, lo + 50].
    """
    lo, hi = probe.domain
    hi = min(hi, lo + 50.0)
    rng = np.random.default_rng(seed)
    triples = np.sort(rng.uniform(lo, hi, size=(samples, 3)), axis=1)

    for x, y, z in triples:
        if not x < y < z:
            continue
        fx, fy, fz = probe(x), probe(y), probe(z)
        chord = ((z - y) * fx + (y - x) * fz) / (z - x)
        if not fx < fy < fz:
            return False
        if fy > chord + tol * max(1.0, abs(chord)):
            return False
    return True


# %% sandwiches


@dataclass(frozen=True)
class Sandwich:
    """
    φ-composed three-member chain together with the ordering hypotheses it rests on.

    Attributes:
        chain (Chain): lower = φ(z)-φ(w), middle = φ(x)-φ(y), upper = φ(z')-φ(w').
        points (dict): The raw points x, y, z, w, z2 (z'), w2 (w').
        hypotheses (list): (label, lower, upper) links that must hold before φ is applied.
    """

    chain: Chain
    points: t.Dict[str, float]
    hypotheses: t.List[t.Tuple[str, float, float]]


def sandwich_hypotheses(x: float, y: float, z: float, w: float, z2: float, w2: float):
    """Ordering links required of the pairs (z, w) <= (x, y) <= (z', w')."""
    return [
        ("w<=z", w, z),
        ("z<=x", z, x),
        ("y<=x", y, x),
        ("x<=z'", x, z2),
        ("w'<=z'", w2, z2),
        ("z-w<=x-y", z - w, x - y),
        ("x-y<=z'-w'", x - y, z2 - w2),
    ]


def _compose(probe: ConvexProbe, points: t.Dict[str, float]) -> Sandwich:
    x, y, z, w, z2, w2 = (points[k] for k in ("x", "y", "z", "w", "z2", "w2"))
    chain = _chain(
        lower=probe(z) - probe(w),
        middle=probe(x) - probe(y),
        upper=probe(z2) - probe(w2),
    )
    return Sandwich(chain=chain, points=dict(points), hypotheses=sandwich_hypotheses(x, y, z, w, z2, w2))


def _sandwich_w(weight: float, r0: float, a: float, b: float, side: float) -> float:
    """2·weight·√(ab) + 2r₀√side·⁴√(ab) − r₀(√(ab) + side)."""
    root = math.sqrt(a * b)
    return 2 * weight * root + 2 * r0 * math.sqrt(side) * math.sqrt(root) - r0 * (root + side)


def phi_sandwich(probe: ConvexProbe, a: float, b: float, nu: float) -> Sandwich:
    """
    Convex-function sandwich of the Young gap, one branch for ν <= 1/2 and one for ν > 1/2.

    The lower pair (z, w) always carries the weight r and the side with the larger weight, the upper
    pair (z', w') the weight R and the other side.
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    if ctx.nu >= 1.0:
        raise DomainError(f"ν must lie in (0, 1), got {nu}")

    heavy, light = (a, b) if ctx.lower_half else (b, a)
    points = dict(
        x=(1.0 - ctx.nu) * a + ctx.nu * b,
        y=a ** (1.0 - ctx.nu) * b**ctx.nu,
        z=ctx.r * (a + b),
        w=_sandwich_w(ctx.r, ctx.r0, a, b, heavy),
        z2=ctx.big_r * (a + b),
        w2=_sandwich_w(ctx.big_r, ctx.r0, a, b, light),
    )
    return _compose(probe, points)


def heinz_sandwich(probe: ConvexProbe, a: float, b: float, nu: float) -> Sandwich:
    """
    Convex-function sandwich of the Heinz gap (a+b)/2 - H_ν(a, b), for 0 <= ν <= 1.
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu, allow_zero=True)

    root, quarter = math.sqrt(a * b), (a * b) ** 0.25
    roots_sum = math.sqrt(a) + math.sqrt(b)

    def w(weight: float) -> float:
        return 2 * weight * root + ctx.r0 * quarter * roots_sum - ctx.r0 / 2 * roots_sum**2

    points = dict(
        x=(a + b) / 2.0,
        y=heinz_mean(a, b, ctx.nu),
        z=ctx.r * (a + b),
        w=w(ctx.r),
        z2=ctx.big_r * (a + b),
        w2=w(ctx.big_r),
    )
    return _compose(probe, points)


# %% Heinz refinement and the squared refinement


def lemma312_gap(a: float, b: float, nu: float) -> Chain:
    """
    (a^(1-ν)b^ν + a^ν b^(1-ν))² + 2r(a-b)² + r₀[(√(ab)-a)² + (√(ab)-b)²]  <=  (a+b)², for a, b >= 0.

    A zero base with a positive exponent gives 0; 0^0 is 1, the limit of the nonzero side.
    """
    _require_nonnegative(a=a, b=b)
    ctx = nu_context(nu, allow_zero=True)
    nu = ctx.nu

    root = math.sqrt(a * b)
    heinz_sum = a ** (1.0 - nu) * b**nu + a**nu * b ** (1.0 - nu)
    lhs = heinz_sum**2 + 2 * ctx.r * (a - b) ** 2 + ctx.r0 * ((root - a) ** 2 + (root - b) ** 2)
    return _chain(lhs=lhs, rhs=(a + b) ** 2)


def squared_young_refined(a: float, b: float, nu: float) -> Chain:
    """
    (a^(1-ν) b^ν)² + r₀(√(ab)-a)² + r(a-b)²  <=  (1-ν)a² + νb², for 0 < ν <= 1/2.

    The typeset square of the geometric term equals (a²)^(1-ν) (b²)^ν, i.e. the refined Young bound at squared arguments.
    """
    _require_positive(a=a, b=b)
    ctx = nu_context(nu)
    if not ctx.lower_half:
        raise DomainError(f"ν must lie in (0, 1/2], got {nu}")

    nu = ctx.nu
    lhs = (a ** (1.0 - nu) * b**nu) ** 2 + ctx.r0 * (math.sqrt(a * b) - a) ** 2 + ctx.r * (a - b) ** 2
    return _chain(lhs=lhs, rhs=(1.0 - nu) * a * a + nu * b * b)
