"""One executable check per inequality: each evaluates the full bound chain and returns a Verdict"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/40_inequality_suite.ipynb.

# %% auto 0
__all__ = [
    "logger",
    "YoungForm",
    "check_sv_young",
    "check_classical_young",
    "check_sababheh",
    "check_zhaowu_hs",
    "check_thm34",
    "check_thm35",
    "check_remark37_det",
    "check_thm36",
    "check_remark37_norm",
    "check_prop38",
    "check_thm39",
    "check_example311",
    "check_thm313",
    "check_prop314",
    "check_lemma31",
    "check_lemma32",
    "check_lemma32_trace",
    "check_lemma33",
    "check_bhatia_kittaneh",
    "HSIdentity",
    "check_hs_identity",
    "check_hs_identities",
    "check_scalar",
    "SCALAR_CHECKS",
    "CheckSpec",
    "REGISTRY",
    "get_check",
    "param_label",
    "Outcome",
    "iter_outcomes",
    "evaluate_inputs",
]

# %% ../nbs/40_inequality_suite.ipynb 3
import logging
import math
import typing as t
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import scalar_kernel as sk
from .core import (
    MATRIX_TOL,
    SCALAR_TOL,
    DomainError,
    ProbeDomainError,
    UsageError,
    Variant,
    Verdict,
    inputs_digest,
    make_verdict,
    signed_pow,
)
from .matrix_core import HermitianPSD, as_matrix, frac_power, singular_values
from .norms import NormSpec, hs_norm_sq, norm
from .sampling import (
    MatrixSample,
    SampleConfig,
    log_grid_pairs,
    matrix_samples,
    scalar_samples,
    seeded_matrix_samples,
    structured_cases,
    tight_scalar_cases,
)

logger = logging.getLogger(__name__)

_Matrix = t.Union[HermitianPSD, np.ndarray, t.Sequence]


# %% helpers


def _psd(value: _Matrix) -> HermitianPSD:
    return value if isinstance(value, HermitianPSD) else HermitianPSD.from_matrix(value)


def _pair(a: _Matrix, b: _Matrix) -> t.Tuple[HermitianPSD, HermitianPSD]:
    a, b = _psd(a), _psd(b)
    if a.dim != b.dim:
        raise DomainError(f"Dimension mismatch: A is {a.dim}x{a.dim}, B is {b.dim}x{b.dim}")
    return a, b


def _triple(a: _Matrix, b: _Matrix, x: t.Any) -> t.Tuple[HermitianPSD, HermitianPSD, np.ndarray]:
    a, b = _pair(a, b)
    x = as_matrix(x)
    if x.shape != (a.dim, a.dim):
        raise DomainError(f"X must be {a.dim}x{a.dim}, got {x.shape}")
    return a, b, x


def _require_pd(**matrices: HermitianPSD) -> None:
    for name, matrix in matrices.items():
        if not matrix.is_positive_definite:
            raise DomainError(f"{name} must be positive definite")


def _nu_in(nu: float, lo: float, hi: float, lo_open: bool = True, hi_open: bool = False) -> sk.NuContext:
    """ν-constants after checking ν ∈ (lo, hi] (interval ends as given by the flags)."""
    nu = float(nu)
    ok_lo = nu > lo if lo_open else nu >= lo
    ok_hi = nu < hi if hi_open else nu <= hi
    if not (ok_lo and ok_hi):
        raise DomainError(
            f"ν must lie in {'(' if lo_open else '['}{lo}, {hi}{')' if hi_open else ']'}, got {nu}"
        )
    return sk.nu_context(nu, allow_zero=True)


def _inputs(nu: t.Optional[float], **matrices: t.Any) -> t.Tuple[t.Dict[str, t.Any], int]:
    inputs = {key: (value.matrix if isinstance(value, HermitianPSD) else value) for key, value in matrices.items()}
    return inputs, inputs_digest(nu, **inputs)


def _verdict(
    check_id: str,
    variant: Variant,
    chain: t.Sequence[t.Tuple[str, float]],
    tol: float,
    nu: t.Optional[float],
    matrices: t.Dict[str, t.Any],
    **kwargs: t.Any,
) -> Verdict:
    inputs, digest = _inputs(nu, **matrices)
    return make_verdict(check_id, variant, chain, tol, nu=nu, inputs=inputs, digest=digest, **kwargs)


def _product(a: HermitianPSD, b: HermitianPSD, x: t.Optional[np.ndarray], s: float, u: float) -> np.ndarray:
    """A^s X B^u (X = I when absent)."""
    left = frac_power(a, s)
    right = frac_power(b, u)
    return left @ right if x is None else left @ x @ right


def _trace_abs(matrix: np.ndarray) -> float:
    """tr|M|, the sum of singular values."""
    return float(np.sum(singular_values(matrix).values))


def _det(a: HermitianPSD) -> float:
    return float(np.prod(a.eigenvalues))


def _variant(variant: "str | Variant", allowed: t.Tuple[Variant, ...]) -> Variant:
    variant = Variant.parse(variant)
    if variant not in allowed:
        raise DomainError(f"Variant '{variant.value}' is not defined here; use one of {[v.value for v in allowed]}")
    return variant


_BOTH = (Variant.CORRECTED, Variant.PRINTED)


def _refinement_block(p: float, q: float, ctx: sk.NuContext, m: int, lower_half: bool) -> float:
    """
    z^m - w^m of the scalar power-sandwich lower bound at (p, q).

    For the lower half z = ν(p+q) and w = 2ν√(pq) - r₀(⁴√(pq) - √p)²; the upper half uses 1-ν and √q.
    w may be negative; it is raised to m as a signed real.
    """
    weight, side = (ctx.nu, p) if lower_half else (1.0 - ctx.nu, q)
    root = math.sqrt(p * q)
    w = 2.0 * weight * root - ctx.r0 * (math.sqrt(root) - math.sqrt(side)) ** 2
    return (weight * (p + q)) ** m - signed_pow(w, m)


def _require_m(m: int, least: int = 1) -> int:
    if int(m) != m or m < least:
        raise DomainError(f"m must be an integer >= {least}, got {m}")
    return int(m)


# %% classical matrix Young inequalities


class YoungForm(str, Enum):
    TRACE = "trace"
    DET = "det"
    NORM = "norm"


def check_sv_young(a: _Matrix, b: _Matrix, nu: float, tol: float = MATRIX_TOL) -> Verdict:
    """
    s_j(A^(1-ν) B^ν) <= s_j((1-ν)A + νB) for every j.

    The chain holds the pair at the index with the smallest slack; every index is a side link.
    """
    a, b = _pair(a, b)
    ctx = _nu_in(nu, 0.0, 1.0, lo_open=False)
    lhs = singular_values(_product(a, b, None, 1.0 - ctx.nu, ctx.nu)).values
    rhs = singular_values((1.0 - ctx.nu) * a.matrix + ctx.nu * b.matrix).values

    j = int(np.argmin(rhs - lhs))
    links = [(f"s{i + 1}", float(lo), float(hi)) for i, (lo, hi) in enumerate(zip(lhs, rhs))]
    chain = [(f"s{j + 1}(A^(1-ν)B^ν)", lhs[j]), (f"s{j + 1}((1-ν)A+νB)", rhs[j])]
    return _verdict("sv-young", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b}, side_links=links)


def check_classical_young(
    form: "YoungForm | str",
    a: _Matrix,
    b: _Matrix,
    x: t.Optional[t.Any],
    nu: float,
    spec: "NormSpec | str | None" = None,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """
    Trace, determinant and unitarily invariant norm versions of Young's inequality.

    The determinant of the non-Hermitian product A^(1-ν) B^ν is taken as det(A)^(1-ν) det(B)^ν.
    """
    form = YoungForm(form)
    if form is YoungForm.NORM:
        if x is None or spec is None:
            raise DomainError("The norm form needs X and a norm spec")
        a, b, x = _triple(a, b, x)
        ctx = _nu_in(nu, 0.0, 1.0)
        spec = NormSpec.parse(spec)
        chain = [
            ("‖A^(1-ν)XB^ν‖", norm(spec, _product(a, b, x, 1.0 - ctx.nu, ctx.nu))),
            ("(1-ν)‖AX‖+ν‖XB‖", (1.0 - ctx.nu) * norm(spec, a.matrix @ x) + ctx.nu * norm(spec, x @ b.matrix)),
        ]
        return _verdict("norm-young", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b, "X": x})

    if x is not None:
        raise DomainError(f"The {form.value} form takes no X")
    a, b = _pair(a, b)
    ctx = _nu_in(nu, 0.0, 1.0, lo_open=False)
    mean = (1.0 - ctx.nu) * a.matrix + ctx.nu * b.matrix

    if form is YoungForm.TRACE:
        chain = [
            ("tr|A^(1-ν)B^ν|", _trace_abs(_product(a, b, None, 1.0 - ctx.nu, ctx.nu))),
            ("tr((1-ν)A+νB)", float(np.trace(mean).real)),
        ]
        return _verdict("trace-young", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b})

    geometric = float(np.prod(np.power(a.eigenvalues, 1.0 - ctx.nu)) * np.prod(np.power(b.eigenvalues, ctx.nu)))
    chain = [("det(A^(1-ν)B^ν)", geometric), ("det((1-ν)A+νB)", _det(HermitianPSD.from_matrix(mean)))]
    return _verdict("det-young", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b})


def check_sababheh(
    spec: "NormSpec | str",
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """
    ‖A^(1-ν)XB^ν‖ + ν(P+Q) - (2ν√(PQ) - r₀(√P - ⁴√(PQ))²) <= (1-ν)P + νQ, P = ‖AX‖, Q = ‖XB‖.

    The middle member replaces the left norm by P^(1-ν) Q^ν. PRINTED reads "+" inside the square,
    which fails already at A = B = X = I.
    """
    variant = _variant(variant, _BOTH)
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 0.5)
    spec = NormSpec.parse(spec)

    p, q = norm(spec, a.matrix @ x), norm(spec, x @ b.matrix)
    quarter = (p * q) ** 0.25
    sign = -1.0 if variant is Variant.CORRECTED else 1.0
    inner = 2.0 * ctx.nu * math.sqrt(p * q) - ctx.r0 * (math.sqrt(p) + sign * quarter) ** 2
    extra = ctx.nu * (p + q) - inner

    chain = [
        ("lhs", norm(spec, _product(a, b, x, 1.0 - ctx.nu, ctx.nu)) + extra),
        ("scalar", p ** (1.0 - ctx.nu) * q**ctx.nu + extra),
        ("(1-ν)P+νQ", (1.0 - ctx.nu) * p + ctx.nu * q),
    ]
    return _verdict("sababheh", variant, chain, tol, ctx.nu, {"A": a, "B": b, "X": x}, magnitude=max(p, q))


# %% Hilbert-Schmidt chains


@dataclass(frozen=True)
class _HSTerms:
    """Squared HS norms shared by the zhaowu-hs, prop38 and thm39 chains; H = A^(1/2) X B^(1/2)."""

    mean: float  # ‖(1-ν)AX + νXB‖₂²
    geo: float  # ‖A^(1-ν)XB^ν‖₂²
    diff: float  # ‖AX - XB‖₂²
    total: float  # ‖AX + XB‖₂²
    h: float  # ‖H‖₂²
    a34: float  # ‖A^(3/4)XB^(1/4)‖₂²
    a14: float  # ‖A^(1/4)XB^(3/4)‖₂²
    h_minus_ax: float
    h_minus_xb: float
    h_plus_ax: float
    h_plus_xb: float

    @classmethod
    def compute(cls, a: HermitianPSD, b: HermitianPSD, x: np.ndarray, nu: float) -> "_HSTerms":
        ax, xb = a.matrix @ x, x @ b.matrix
        h = _product(a, b, x, 0.5, 0.5)
        return cls(
            mean=hs_norm_sq((1.0 - nu) * ax + nu * xb),
            geo=hs_norm_sq(_product(a, b, x, 1.0 - nu, nu)),
            diff=hs_norm_sq(ax - xb),
            total=hs_norm_sq(ax + xb),
            h=hs_norm_sq(h),
            a34=hs_norm_sq(_product(a, b, x, 0.75, 0.25)),
            a14=hs_norm_sq(_product(a, b, x, 0.25, 0.75)),
            h_minus_ax=hs_norm_sq(h - ax),
            h_minus_xb=hs_norm_sq(h - xb),
            h_plus_ax=hs_norm_sq(h + ax),
            h_plus_xb=hs_norm_sq(h + xb),
        )

    @property
    def magnitude(self) -> float:
        return max(self.mean, self.geo, self.total, self.h_plus_ax, self.h_plus_xb)


def check_zhaowu_hs(
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """
    Refined and reversed squared Young bounds for the HS norm, one branch for ν <= 1/2 and one above.

    For ν > 1/2 CORRECTED puts r² in the lower and R² in the upper bound; PRINTED keeps the typeset swap.
    """
    variant = _variant(variant, _BOTH)
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 1.0, hi_open=True)
    terms = _HSTerms.compute(a, b, x, ctx.nu)

    if ctx.lower_half:
        lower = ctx.r**2 * terms.diff + ctx.r0 * terms.h_minus_ax
        upper = ctx.big_r**2 * terms.diff - ctx.r0 * terms.h_minus_xb
    else:
        low_coef, up_coef = (ctx.r, ctx.big_r) if variant is Variant.CORRECTED else (ctx.big_r, ctx.r)
        lower = low_coef**2 * terms.diff + ctx.r0 * terms.h_minus_xb
        upper = up_coef**2 * terms.diff - ctx.r0 * terms.h_minus_ax

    chain = [("lower", lower), ("gap", terms.mean - terms.geo), ("upper", upper)]
    return _verdict(
        "zhaowu-hs", variant, chain, tol, ctx.nu, {"A": a, "B": b, "X": x}, magnitude=terms.magnitude
    )


def _prop38_points(terms: _HSTerms, ctx: sk.NuContext, variant: Variant) -> t.Dict[str, float]:
    """
    (z, w, z', w') with lower = z - w and upper = z' - w'.

    CORRECTED substitutes the two HS identities into the corrected `check_zhaowu_hs` bounds.
    """
    r2, big_r2, r0 = ctx.r**2, ctx.big_r**2, ctx.r0
    if variant is Variant.CORRECTED:
        # lower adds r₀‖H - ·‖², upper subtracts it
        a_low = 4.0 * (r2 * terms.h + r0 * terms.a34) - r0 * terms.h_plus_ax
        b_low = 4.0 * (r2 * terms.h + r0 * terms.a14) - r0 * terms.h_plus_xb
        a_up = 4.0 * (big_r2 * terms.h - r0 * terms.a34) + r0 * terms.h_plus_ax
        b_up = 4.0 * (big_r2 * terms.h - r0 * terms.a14) + r0 * terms.h_plus_xb
        if ctx.lower_half:
            return dict(z=r2 * terms.total, w=a_low, z2=big_r2 * terms.total, w2=b_up)
        return dict(z=r2 * terms.total, w=b_low, z2=big_r2 * terms.total, w2=a_up)

    if ctx.lower_half:
        return dict(
            z=r2 * terms.total,
            w=4.0 * (r2 * terms.h + r0 * terms.a34 - r0 * terms.h_plus_ax),
            z2=big_r2 * terms.total,
            w2=4.0 * (big_r2 * terms.h + terms.a14) - r0 * terms.h_plus_xb,
        )
    return dict(
        z=big_r2 * terms.total,
        w=4.0 * (big_r2 * terms.h + r0 * terms.a14) - r0 * terms.h_minus_xb,
        z2=r2 * terms.total,
        w2=4.0 * (r2 * terms.h + r0 * terms.a34) - r0 * terms.h_plus_ax,
    )


def check_prop38(
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """
    Squared HS Young bounds rewritten through the HS identities. CORRECTED coincides algebraically with
    `check_zhaowu_hs`.
    """
    variant = _variant(variant, _BOTH)
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 1.0, hi_open=True)
    terms = _HSTerms.compute(a, b, x, ctx.nu)
    points = _prop38_points(terms, ctx, variant)

    chain = [
        ("lower", points["z"] - points["w"]),
        ("gap", terms.mean - terms.geo),
        ("upper", points["z2"] - points["w2"]),
    ]
    return _verdict("prop38", variant, chain, tol, ctx.nu, {"A": a, "B": b, "X": x}, magnitude=terms.magnitude)


def check_thm39(
    probe: "sk.ConvexProbe | str",
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
    check_id: str = "thm39",
) -> Verdict:
    """
    φ(z) - φ(w) <= φ(‖(1-ν)AX+νXB‖₂²) - φ(‖A^(1-ν)XB^ν‖₂²) <= φ(z') - φ(w') with (z, w, z', w')
    from the `check_prop38` chain of the same half. The sandwich hypotheses are side links.

    PRINTED evaluates w' as typeset, 4(R²‖H‖₂² + ‖A^(1/4)XB^(3/4)‖₂²) - r₀‖H+XB‖₂² (mirrored above 1/2).

    Raises:
        ProbeDomainError: If w or w' is negative and φ is only defined on [0, ∞).
    """
    variant = _variant(variant, _BOTH)
    probe = sk.ConvexProbe.parse(probe) if isinstance(probe, str) else probe
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 1.0, hi_open=True)
    terms = _HSTerms.compute(a, b, x, ctx.nu)

    points = _prop38_points(terms, ctx, Variant.CORRECTED)
    if variant is Variant.PRINTED:
        weighted, plus = (terms.a14, terms.h_plus_xb) if ctx.lower_half else (terms.a34, terms.h_plus_ax)
        points["w2"] = 4.0 * (ctx.big_r**2 * terms.h + weighted) - ctx.r0 * plus
    points.update(x=terms.mean, y=terms.geo)

    values = {key: probe(value) for key, value in points.items()}
    chain = [
        ("φ(z)-φ(w)", values["z"] - values["w"]),
        ("φ(x)-φ(y)", values["x"] - values["y"]),
        ("φ(z')-φ(w')", values["z2"] - values["w2"]),
    ]
    hypotheses = sk.sandwich_hypotheses(*(points[k] for k in ("x", "y", "z", "w", "z2", "w2")))
    return _verdict(
        check_id,
        variant,
        chain,
        tol,
        ctx.nu,
        {"A": a, "B": b, "X": x},
        side_links=hypotheses,
        magnitude=max(abs(v) for v in values.values()),
    )


def check_example311(
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    m: int,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """`check_thm39` with φ(x) = x^(m/2), m >= 2."""
    probe = sk.ConvexProbe.power_half(_require_m(m, least=2))
    return check_thm39(probe, a, b, x, nu, variant=variant, tol=tol, check_id="example311")


def check_thm313(a: _Matrix, b: _Matrix, x: t.Any, nu: float, tol: float = MATRIX_TOL) -> Verdict:
    """
    ‖A^ν X B^(1-ν) + A^(1-ν) X B^ν‖₂² <= ‖AX+XB‖₂² - 2r‖AX-XB‖₂² - r₀(‖H-AX‖₂² + ‖H-XB‖₂²).
    """
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 0.5)
    terms = _HSTerms.compute(a, b, x, ctx.nu)

    heinz = hs_norm_sq(_product(a, b, x, ctx.nu, 1.0 - ctx.nu) + _product(a, b, x, 1.0 - ctx.nu, ctx.nu))
    rhs = terms.total - 2.0 * ctx.r * terms.diff - ctx.r0 * (terms.h_minus_ax + terms.h_minus_xb)
    chain = [("‖A^νXB^(1-ν)+A^(1-ν)XB^ν‖₂²", heinz), ("rhs", rhs)]
    return _verdict("thm313", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b, "X": x}, magnitude=terms.total)


# %% powers of trace, determinant and norm refinements


def check_thm34(a: _Matrix, b: _Matrix, nu: float, m: int, tol: float = MATRIX_TOL) -> Verdict:
    """
    (tr|A^(1-ν)B^ν|)^m + z^m - w^m <= (tr((1-ν)A + νB))^m at (p, q) = (trA, trB) for ν <= 1/2,
    with weight 1-ν and the trB side above. The middle member is the `check_lemma32_trace` step.
    """
    a, b = _pair(a, b)
    _require_pd(A=a, B=b)
    ctx = _nu_in(nu, 0.0, 1.0)
    m = _require_m(m)

    p, q = float(np.sum(a.eigenvalues)), float(np.sum(b.eigenvalues))
    block = _refinement_block(p, q, ctx, m, ctx.lower_half)
    rhs = ((1.0 - ctx.nu) * p + ctx.nu * q) ** m
    chain = [
        ("lhs", _trace_abs(_product(a, b, None, 1.0 - ctx.nu, ctx.nu)) ** m + block),
        ("lemma32", (p ** (1.0 - ctx.nu) * q**ctx.nu) ** m + block),
        ("(tr((1-ν)A+νB))^m", rhs),
    ]
    magnitude = max(rhs, (p + q) ** m)
    return _verdict("thm34", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b, "m": m}, magnitude=magnitude)


def _det_refinement(
    check_id: str, a: _Matrix, b: _Matrix, nu: float, m: int, variant: Variant, lower_half: bool, tol: float
) -> Verdict:
    variant = _variant(variant, _BOTH)
    a, b = _pair(a, b)
    _require_pd(A=a, B=b)
    m = _require_m(m)
    ctx = _nu_in(nu, 0.0, 0.5) if lower_half else _nu_in(nu, 0.5, 1.0, lo_open=False)
    n = a.dim

    det_a, det_b = _det(a), _det(b)
    geometric = (det_a ** (1.0 - ctx.nu) * det_b**ctx.nu) ** m
    rhs = _det(HermitianPSD.from_matrix((1.0 - ctx.nu) * a.matrix + ctx.nu * b.matrix)) ** m

    if variant is Variant.PRINTED:
        weight, side = (ctx.nu, det_a) if lower_half else (1.0 - ctx.nu, det_b)
        root = math.sqrt(det_a * det_b)
        w = 2.0 * weight * root - ctx.r0 * (math.sqrt(root) - math.sqrt(side)) ** 2
        lhs = geometric + weight ** (m * n) * (det_a + det_b) ** m - signed_pow(w, m)
        chain = [("lhs", lhs), ("det((1-ν)A+νB)^m", rhs)]
        magnitude = max(rhs, geometric, (det_a + det_b) ** m, abs(w) ** m)
    else:
        alpha, beta = det_a ** (1.0 / n), det_b ** (1.0 / n)
        block = _refinement_block(alpha, beta, ctx, m * n, lower_half)
        mean = ((1.0 - ctx.nu) * alpha + ctx.nu * beta) ** (m * n)
        chain = [("lhs", geometric + block), ("cor23", mean), ("det((1-ν)A+νB)^m", rhs)]
        magnitude = max(rhs, (alpha + beta) ** (m * n))

    return _verdict(check_id, variant, chain, tol, ctx.nu, {"A": a, "B": b, "m": m}, magnitude=magnitude)


def check_thm35(
    a: _Matrix, b: _Matrix, nu: float, m: int, variant: "Variant | str" = Variant.CORRECTED, tol: float = MATRIX_TOL
) -> Verdict:
    """
    Determinant refinement for 0 < ν <= 1/2.

    CORRECTED follows the proof: the power sandwich with exponent mn at α = detA^(1/n), β = detB^(1/n), then
    Minkowski's determinant inequality. PRINTED keeps ν^(mn)(detA + detB)^m and the refinement at
    (detA, detB) raised to m; both agree for n = 1.
    """
    return _det_refinement("thm35", a, b, nu, m, Variant.parse(variant), True, tol)


def check_remark37_det(
    a: _Matrix, b: _Matrix, nu: float, m: int, variant: "Variant | str" = Variant.CORRECTED, tol: float = MATRIX_TOL
) -> Verdict:
    """Mirror of `check_thm35` for 1/2 <= ν <= 1: weight 1-ν, refinement on the detB side."""
    return _det_refinement("remark37-det", a, b, nu, m, Variant.parse(variant), False, tol)


def _norm_refinement(
    check_id: str, spec: "NormSpec | str", a: _Matrix, b: _Matrix, x: t.Any, nu: float, m: int, lower_half: bool, tol: float
) -> Verdict:
    a, b, x = _triple(a, b, x)
    spec = NormSpec.parse(spec)
    m = _require_m(m)
    ctx = _nu_in(nu, 0.0, 0.5) if lower_half else _nu_in(nu, 0.5, 1.0, lo_open=False)

    p, q = norm(spec, a.matrix @ x), norm(spec, x @ b.matrix)
    block = _refinement_block(p, q, ctx, m, lower_half)
    rhs = ((1.0 - ctx.nu) * p + ctx.nu * q) ** m
    chain = [
        ("lhs", norm(spec, _product(a, b, x, 1.0 - ctx.nu, ctx.nu)) ** m + block),
        ("lemma32", (p ** (1.0 - ctx.nu) * q**ctx.nu) ** m + block),
        ("((1-ν)P+νQ)^m", rhs),
    ]
    inputs = {"A": a, "B": b, "X": x, "norm": str(spec), "m": m}
    return _verdict(check_id, Variant.CORRECTED, chain, tol, ctx.nu, inputs, magnitude=max(rhs, (p + q) ** m))


def check_thm36(
    spec: "NormSpec | str", a: _Matrix, b: _Matrix, x: t.Any, nu: float, m: int, tol: float = MATRIX_TOL
) -> Verdict:
    """`check_thm34` with (trA, trB) replaced by (‖AX‖, ‖XB‖), for 0 < ν <= 1/2."""
    return _norm_refinement("thm36", spec, a, b, x, nu, m, True, tol)


def check_remark37_norm(
    spec: "NormSpec | str", a: _Matrix, b: _Matrix, x: t.Any, nu: float, m: int, tol: float = MATRIX_TOL
) -> Verdict:
    """Mirror of `check_thm36` for 1/2 <= ν <= 1; the r₀ term is read squared as in `check_thm36`."""
    return _norm_refinement("remark37-norm", spec, a, b, x, nu, m, False, tol)


def check_prop314(
    spec: "NormSpec | str",
    a: _Matrix,
    b: _Matrix,
    x: t.Any,
    nu: float,
    variant: "Variant | str" = Variant.CORRECTED,
    tol: float = MATRIX_TOL,
) -> Verdict:
    """
    ‖A^(1-ν)XB^ν + A^νXB^(1-ν)‖ <= P^(1-ν)Q^ν + P^νQ^(1-ν) <= rhs, P = ‖AX‖, Q = ‖XB‖, 0 < ν <= 1/2.

    CORRECTED: rhs = (1-2ν)(P+Q) + 4ν√(PQ) - r₀((√P - ⁴√(PQ))² + (√Q - ⁴√(PQ))²).
    PRINTED: rhs = (1-2ν)(P+Q) - (4ν√(PQ) - r₀((√P + ⁴√(PQ))² + (√Q + ⁴√(PQ))²)).
    """
    variant = _variant(variant, _BOTH)
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 0.5)
    spec = NormSpec.parse(spec)

    p, q = norm(spec, a.matrix @ x), norm(spec, x @ b.matrix)
    root, quarter = math.sqrt(p * q), (p * q) ** 0.25
    head = (1.0 - 2.0 * ctx.nu) * (p + q)
    if variant is Variant.CORRECTED:
        squares = (math.sqrt(p) - quarter) ** 2 + (math.sqrt(q) - quarter) ** 2
        rhs = head + 4.0 * ctx.nu * root - ctx.r0 * squares
    else:
        squares = (math.sqrt(p) + quarter) ** 2 + (math.sqrt(q) + quarter) ** 2
        rhs = head - (4.0 * ctx.nu * root - ctx.r0 * squares)

    heinz = _product(a, b, x, 1.0 - ctx.nu, ctx.nu) + _product(a, b, x, ctx.nu, 1.0 - ctx.nu)
    chain = [
        ("‖A^(1-ν)XB^ν+A^νXB^(1-ν)‖", norm(spec, heinz)),
        ("lemma32", p ** (1.0 - ctx.nu) * q**ctx.nu + p**ctx.nu * q ** (1.0 - ctx.nu)),
        ("rhs", rhs),
    ]
    inputs = {"A": a, "B": b, "X": x, "norm": str(spec)}
    return _verdict("prop314", variant, chain, tol, ctx.nu, inputs, magnitude=p + q)


# %% lemmas


def check_lemma31(a: _Matrix, b: _Matrix, tol: float = MATRIX_TOL) -> Verdict:
    """Σ s_j(AB) <= Σ s_j(A) s_j(B)."""
    a, b = _pair(a, b)
    chain = [
        ("Σ s_j(AB)", _trace_abs(a.matrix @ b.matrix)),
        ("Σ s_j(A)s_j(B)", float(np.dot(singular_values(a.matrix).values, singular_values(b.matrix).values))),
    ]
    return _verdict("lemma31", Variant.CORRECTED, chain, tol, None, {"A": a, "B": b})


def check_lemma32(
    spec: "NormSpec | str", a: _Matrix, b: _Matrix, x: t.Any, nu: float, tol: float = MATRIX_TOL
) -> Verdict:
    """Heinz-Kato type bound ‖A^(1-ν)XB^ν‖ <= ‖AX‖^(1-ν) ‖XB‖^ν."""
    a, b, x = _triple(a, b, x)
    ctx = _nu_in(nu, 0.0, 1.0, lo_open=False)
    spec = NormSpec.parse(spec)
    chain = [
        ("‖A^(1-ν)XB^ν‖", norm(spec, _product(a, b, x, 1.0 - ctx.nu, ctx.nu))),
        ("‖AX‖^(1-ν)‖XB‖^ν", norm(spec, a.matrix @ x) ** (1.0 - ctx.nu) * norm(spec, x @ b.matrix) ** ctx.nu),
    ]
    return _verdict("lemma32", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b, "X": x, "norm": str(spec)})


def check_lemma32_trace(a: _Matrix, b: _Matrix, nu: float, tol: float = MATRIX_TOL) -> Verdict:
    """tr|A^(1-ν)B^ν| <= (trA)^(1-ν) (trB)^ν, the step used by `check_thm34`."""
    a, b = _pair(a, b)
    ctx = _nu_in(nu, 0.0, 1.0, lo_open=False)
    p, q = float(np.sum(a.eigenvalues)), float(np.sum(b.eigenvalues))
    chain = [
        ("tr|A^(1-ν)B^ν|", _trace_abs(_product(a, b, None, 1.0 - ctx.nu, ctx.nu))),
        ("(trA)^(1-ν)(trB)^ν", p ** (1.0 - ctx.nu) * q**ctx.nu),
    ]
    return _verdict("lemma32-trace", Variant.CORRECTED, chain, tol, ctx.nu, {"A": a, "B": b})


def check_lemma33(a: _Matrix, b: _Matrix, tol: float = MATRIX_TOL) -> Verdict:
    """Minkowski: det(A+B)^(1/n) >= detA^(1/n) + detB^(1/n)."""
    a, b = _pair(a, b)
    _require_pd(A=a, B=b)
    n = a.dim
    total = HermitianPSD.from_matrix(a.matrix + b.matrix)
    chain = [
        ("detA^(1/n)+detB^(1/n)", _det(a) ** (1.0 / n) + _det(b) ** (1.0 / n)),
        ("det(A+B)^(1/n)", _det(total) ** (1.0 / n)),
    ]
    return _verdict("lemma33", Variant.CORRECTED, chain, tol, None, {"A": a, "B": b})


def check_bhatia_kittaneh(
    spec: "NormSpec | str", a: _Matrix, b: _Matrix, x: t.Any, tol: float = MATRIX_TOL
) -> Verdict:
    """2‖A^(1/2) X B^(1/2)‖ <= ‖AX + XB‖."""
    a, b, x = _triple(a, b, x)
    spec = NormSpec.parse(spec)
    chain = [
        ("2‖A^(1/2)XB^(1/2)‖", 2.0 * norm(spec, _product(a, b, x, 0.5, 0.5))),
        ("‖AX+XB‖", norm(spec, a.matrix @ x + x @ b.matrix)),
    ]
    return _verdict("bhatia-kittaneh", Variant.CORRECTED, chain, tol, None, {"A": a, "B": b, "X": x, "norm": str(spec)})


# %% HS identities


class HSIdentity(str, Enum):
    SUM = "sum"  # ‖AX - XB‖² = ‖AX + XB‖² - 4‖A^(1/2)XB^(1/2)‖²
    A_SIDE = "aside"  # ‖H - AX‖² = ‖H + AX‖² - 4‖A^(3/4)XB^(1/4)‖²
    B_SIDE = "bside"  # ‖H - XB‖² = ‖H + XB‖² - 4‖A^(1/4)XB^(3/4)‖²


IDENTITY_TOL = 1e-9


def check_hs_identity(
    kind: "HSIdentity | str", a: _Matrix, b: _Matrix, x: t.Any, tol: float = IDENTITY_TOL
) -> Verdict:
    """
    One HS decomposition identity as a two-sided link: both lhs <= rhs and rhs <= lhs must hold.
    """
    kind = HSIdentity(kind)
    a, b, x = _triple(a, b, x)
    ax, xb = a.matrix @ x, x @ b.matrix
    h = _product(a, b, x, 0.5, 0.5)

    if kind is HSIdentity.SUM:
        lhs, plus, cross = hs_norm_sq(ax - xb), hs_norm_sq(ax + xb), hs_norm_sq(h)
    elif kind is HSIdentity.A_SIDE:
        lhs, plus, cross = hs_norm_sq(h - ax), hs_norm_sq(h + ax), hs_norm_sq(_product(a, b, x, 0.75, 0.25))
    else:
        lhs, plus, cross = hs_norm_sq(h - xb), hs_norm_sq(h + xb), hs_norm_sq(_product(a, b, x, 0.25, 0.75))

    rhs = plus - 4.0 * cross
    return _verdict(
        f"hs-identity-{kind.value}",
        Variant.CORRECTED,
        [("lhs", lhs), ("rhs", rhs)],
        tol,
        None,
        {"A": a, "B": b, "X": x},
        side_links=[("rhs<=lhs", rhs, lhs)],
        magnitude=plus,
    )


def check_hs_identities(a: _Matrix, b: _Matrix, x: t.Any, tol: float = IDENTITY_TOL) -> t.List[Verdict]:
    a, b, x = _triple(a, b, x)
    return [check_hs_identity(kind, a, b, x, tol=tol) for kind in HSIdentity]


# %% scalar chains


def _sandwich_verdict(
    check_id: str, sandwich: sk.Sandwich, probe: sk.ConvexProbe, a: float, b: float, nu: float, tol: float
) -> Verdict:
    magnitude = max(abs(probe(v)) for v in sandwich.points.values())
    return make_verdict(
        check_id,
        Variant.CORRECTED,
        sandwich.chain.pairs(),
        tol,
        nu=nu,
        inputs={"a": a, "b": b, "probe": probe.name},
        side_links=sandwich.hypotheses,
        magnitude=magnitude,
    )


def _heinz_chain(a: float, b: float, nu: float) -> sk.Chain:
    return sk.Chain(
        ("√(ab)", "H_ν", "(a+b)/2"),
        (math.sqrt(a * b), sk.heinz_mean(a, b, nu), (a + b) / 2.0),
    )


# check id -> (chain builder taking (a, b, ν, variant), variants)
SCALAR_CHECKS: t.Dict[str, t.Tuple[t.Callable[..., sk.Chain], t.Tuple[Variant, ...]]] = {
    "young-refined": (sk.young_refined, _BOTH),
    "young-squared": (sk.young_squared, _BOTH),
    "quadratic-gap": (sk.quadratic_gap_bounds, (Variant.DERIVED_FROM_THM22, Variant.PRINTED)),
    "heinz-mean": (lambda a, b, nu, variant: _heinz_chain(a, b, nu), (Variant.CORRECTED,)),
    "lemma312": (lambda a, b, nu, variant: sk.lemma312_gap(a, b, nu), (Variant.CORRECTED,)),
    "squared-young": (lambda a, b, nu, variant: sk.squared_young_refined(a, b, nu), (Variant.CORRECTED,)),
}

_SANDWICHES = {
    "phi-sandwich": sk.phi_sandwich,
    "cor23": sk.phi_sandwich,
    "heinz-sandwich": sk.heinz_sandwich,
    "example25": sk.heinz_sandwich,
}


def check_scalar(
    check_id: str,
    a: float,
    b: float,
    nu: float,
    variant: "Variant | str | None" = None,
    probe: "sk.ConvexProbe | str | None" = None,
    m: t.Optional[int] = None,
    tol: float = SCALAR_TOL,
) -> Verdict:
    """
    Evaluates a scalar chain as a Verdict. Sandwich checks take a probe; `cor23` and `example25` take
    m and use φ(x) = x^m.
    """
    a, b = float(a), float(b)
    if check_id in _SANDWICHES:
        if check_id in ("cor23", "example25"):
            probe = sk.ConvexProbe.power(_require_m(m if m is not None else 1))
        elif probe is None:
            raise DomainError(f"'{check_id}' needs a convex probe")
        probe = sk.ConvexProbe.parse(probe) if isinstance(probe, str) else probe
        return _sandwich_verdict(check_id, _SANDWICHES[check_id](probe, a, b, nu), probe, a, b, float(nu), tol)

    try:
        build, variants = SCALAR_CHECKS[check_id]
    except KeyError as e:
        raise UsageError(f"Unknown scalar check '{check_id}'") from e
    variant = _variant(variant if variant is not None else variants[0], variants)
    chain = build(a, b, nu, variant)
    return make_verdict(check_id, variant, chain.pairs(), tol, nu=float(nu), inputs={"a": a, "b": b})


# %% registry


_NuDomain = t.Tuple[float, float, bool, bool]  # lo, hi, lo_open, hi_open
_Runner = t.Callable[[t.Any, t.Optional[float], Variant, t.Dict[str, t.Any], float], Verdict]


@dataclass(frozen=True)
class CheckSpec:
    """
    A registered check.

    Attributes:
        check_id (str): Stable id used by the CLI and in reports.
        title (str): Short name of the inequality.
        scalar (bool): Evaluated over (a, b) pairs instead of matrix samples.
        nu_domain (tuple | None): (lo, hi, lo_open, hi_open), or None for checks without ν.
        run (callable): (case, ν, variant, param, tol) -> Verdict.
        variants (tuple): Supported readings; the first is the pinned one.
        params (str): Quantified parameters: "", "norm", "m", "m2" (m >= 2), "norm,m" or "probe".
        requires_pd (bool): Samples that are not positive definite are left out.
        tol (float | None): Fixed tolerance overriding the config.
    """

    check_id: str
    title: str
    scalar: bool
    nu_domain: t.Optional[_NuDomain]
    run: _Runner = field(compare=False)
    variants: t.Tuple[Variant, ...] = (Variant.CORRECTED,)
    params: str = ""
    requires_pd: bool = False
    tol: t.Optional[float] = None

    @property
    def pinned(self) -> Variant:
        return self.variants[0]

    @property
    def has_variants(self) -> bool:
        return len(self.variants) > 1

    def accepts_nu(self, nu: float) -> bool:
        if self.nu_domain is None:
            return True
        lo, hi, lo_open, hi_open = self.nu_domain
        return (nu > lo if lo_open else nu >= lo) and (nu < hi if hi_open else nu <= hi)

    def nu_grid(self, grid: t.Sequence[float]) -> t.List[float]:
        return [nu for nu in grid if self.accepts_nu(nu)]

    def resolve_variant(self, variant: "Variant | str | None") -> Variant:
        """The requested reading if supported, else the pinned one."""
        if variant is None:
            return self.pinned
        variant = Variant.parse(variant)
        if variant in self.variants:
            return variant
        if variant is Variant.CORRECTED and Variant.DERIVED_FROM_THM22 in self.variants:
            return Variant.DERIVED_FROM_THM22
        return self.pinned

    def tolerance(self, config: SampleConfig) -> float:
        if self.tol is not None:
            return self.tol
        return config.scalar_tol if self.scalar else config.tol

    def param_grid(self, config: SampleConfig) -> t.List[t.Dict[str, t.Any]]:
        norms = [{"norm": str(NormSpec.parse(spec))} for spec in config.norms]
        ms = [{"m": m} for m in config.m_values]
        if self.params == "norm":
            return norms
        if self.params == "m":
            return ms
        if self.params == "m2":
            return [{"m": m} for m in config.m_values if m >= 2] or [{"m": 2}]
        if self.params == "norm,m":
            return [{**n, **m} for n in norms for m in ms]
        if self.params == "probe":
            return [{"probe": probe.name} for probe in sk.default_probes()]
        return [{}]


def param_label(param: t.Mapping[str, t.Any]) -> str:
    return ",".join(f"{key}={value}" for key, value in param.items())


def _applies(param: t.Mapping[str, t.Any], dim: int) -> bool:
    return "norm" not in param or NormSpec.parse(param["norm"]).applies_to((dim, dim))


_FULL: _NuDomain = (0.0, 1.0, False, False)
_OPEN: _NuDomain = (0.0, 1.0, True, True)
_HALF_OPEN: _NuDomain = (0.0, 1.0, True, False)
_LOWER: _NuDomain = (0.0, 0.5, True, False)
_UPPER: _NuDomain = (0.5, 1.0, False, False)


def _scalar_spec(check_id: str, title: str, nu_domain: _NuDomain, params: str = "") -> CheckSpec:
    variants = SCALAR_CHECKS[check_id][1] if check_id in SCALAR_CHECKS else (Variant.CORRECTED,)

    def run(case, nu, variant, param, tol):
        a, b = case
        return check_scalar(check_id, a, b, nu, variant=variant, probe=param.get("probe"), m=param.get("m"), tol=tol)

    return CheckSpec(check_id, title, True, nu_domain, run, variants=variants, params=params)


REGISTRY: t.Dict[str, CheckSpec] = {
    spec.check_id: spec
    for spec in [
        # matrix checks
        CheckSpec("sv-young", "singular values of A^(1-ν)B^ν", False, _FULL, lambda s, nu, v, p, tol: check_sv_young(s.a, s.b, nu, tol=tol)),
        CheckSpec(
            "trace-young",
            "trace Young",
            False,
            _FULL,
            lambda s, nu, v, p, tol: check_classical_young(YoungForm.TRACE, s.a, s.b, None, nu, tol=tol),
        ),
        CheckSpec(
            "det-young",
            "determinant Young",
            False,
            _FULL,
            lambda s, nu, v, p, tol: check_classical_young(YoungForm.DET, s.a, s.b, None, nu, tol=tol),
        ),
        CheckSpec(
            "norm-young",
            "unitarily invariant norm Young",
            False,
            _HALF_OPEN,
            lambda s, nu, v, p, tol: check_classical_young(YoungForm.NORM, s.a, s.b, s.x, nu, p["norm"], tol=tol),
            params="norm",
        ),
        CheckSpec(
            "sababheh",
            "refined norm Young",
            False,
            _LOWER,
            lambda s, nu, v, p, tol: check_sababheh(p["norm"], s.a, s.b, s.x, nu, v, tol=tol),
            variants=_BOTH,
            params="norm",
        ),
        CheckSpec(
            "zhaowu-hs",
            "refined and reversed squared HS Young",
            False,
            _OPEN,
            lambda s, nu, v, p, tol: check_zhaowu_hs(s.a, s.b, s.x, nu, v, tol=tol),
            variants=_BOTH,
        ),
        CheckSpec(
            "thm34",
            "trace power refinement",
            False,
            _HALF_OPEN,
            lambda s, nu, v, p, tol: check_thm34(s.a, s.b, nu, p["m"], tol=tol),
            params="m",
            requires_pd=True,
        ),
        CheckSpec(
            "thm35",
            "determinant power refinement",
            False,
            _LOWER,
            lambda s, nu, v, p, tol: check_thm35(s.a, s.b, nu, p["m"], v, tol=tol),
            variants=_BOTH,
            params="m",
            requires_pd=True,
        ),
        CheckSpec(
            "remark37-det",
            "determinant power refinement, upper ν",
            False,
            _UPPER,
            lambda s, nu, v, p, tol: check_remark37_det(s.a, s.b, nu, p["m"], v, tol=tol),
            variants=_BOTH,
            params="m",
            requires_pd=True,
        ),
        CheckSpec(
            "thm36",
            "norm power refinement",
            False,
            _LOWER,
            lambda s, nu, v, p, tol: check_thm36(p["norm"], s.a, s.b, s.x, nu, p["m"], tol=tol),
            params="norm,m",
        ),
        CheckSpec(
            "remark37-norm",
            "norm power refinement, upper ν",
            False,
            _UPPER,
            lambda s, nu, v, p, tol: check_remark37_norm(p["norm"], s.a, s.b, s.x, nu, p["m"], tol=tol),
            params="norm,m",
        ),
        CheckSpec(
            "prop38",
            "squared HS Young through the HS identities",
            False,
            _OPEN,
            lambda s, nu, v, p, tol: check_prop38(s.a, s.b, s.x, nu, v, tol=tol),
            variants=_BOTH,
        ),
        CheckSpec(
            "thm39",
            "convex-function HS refinement",
            False,
            _OPEN,
            lambda s, nu, v, p, tol: check_thm39(p["probe"], s.a, s.b, s.x, nu, v, tol=tol),
            variants=_BOTH,
            params="probe",
        ),
        CheckSpec(
            "example311",
            "HS power refinement",
            False,
            _OPEN,
            lambda s, nu, v, p, tol: check_example311(s.a, s.b, s.x, nu, p["m"], v, tol=tol),
            variants=_BOTH,
            params="m2",
        ),
        CheckSpec(
            "thm313", "refined HS Heinz", False, _LOWER, lambda s, nu, v, p, tol: check_thm313(s.a, s.b, s.x, nu, tol=tol)
        ),
        CheckSpec(
            "prop314",
            "refined norm Heinz",
            False,
            _LOWER,
            lambda s, nu, v, p, tol: check_prop314(p["norm"], s.a, s.b, s.x, nu, v, tol=tol),
            variants=_BOTH,
            params="norm",
        ),
        CheckSpec("lemma31", "singular values of a product", False, None, lambda s, nu, v, p, tol: check_lemma31(s.a, s.b, tol=tol)),
        CheckSpec(
            "lemma32",
            "Heinz-Kato type norm bound",
            False,
            _FULL,
            lambda s, nu, v, p, tol: check_lemma32(p["norm"], s.a, s.b, s.x, nu, tol=tol),
            params="norm",
        ),
        CheckSpec(
            "lemma32-trace",
            "Heinz-Kato type trace bound",
            False,
            _FULL,
            lambda s, nu, v, p, tol: check_lemma32_trace(s.a, s.b, nu, tol=tol),
        ),
        CheckSpec(
            "lemma33",
            "Minkowski determinant",
            False,
            None,
            lambda s, nu, v, p, tol: check_lemma33(s.a, s.b, tol=tol),
            requires_pd=True,
        ),
        CheckSpec(
            "bhatia-kittaneh",
            "Bhatia-Kittaneh",
            False,
            None,
            lambda s, nu, v, p, tol: check_bhatia_kittaneh(p["norm"], s.a, s.b, s.x, tol=tol),
            params="norm",
        ),
        *(
            CheckSpec(
                f"hs-identity-{kind.value}",
                "HS decomposition identity",
                False,
                None,
                lambda s, nu, v, p, tol, kind=kind: check_hs_identity(kind, s.a, s.b, s.x, tol=tol),
                tol=IDENTITY_TOL,
            )
            for kind in HSIdentity
        ),
        # scalar checks
        _scalar_spec("young-refined", "refined Young", _HALF_OPEN),
        _scalar_spec("young-squared", "refined squared Young", _OPEN),
        _scalar_spec("quadratic-gap", "quadratic Young gap", _OPEN),
        _scalar_spec("heinz-mean", "Heinz inequality", _FULL),
        _scalar_spec("phi-sandwich", "convex-function sandwich", _OPEN, params="probe"),
        _scalar_spec("cor23", "power sandwich", _OPEN, params="m"),
        _scalar_spec("heinz-sandwich", "Heinz mean sandwich", _FULL, params="probe"),
        _scalar_spec("example25", "Heinz mean power sandwich", _FULL, params="m"),
        _scalar_spec("lemma312", "scalar Heinz refinement", _FULL),
        _scalar_spec("squared-young", "squared Young refinement", _LOWER),
    ]
}


def get_check(check_id: str) -> CheckSpec:
    try:
        return REGISTRY[check_id]
    except KeyError as e:
        raise UsageError(f"Unknown check id '{check_id}'; known ids: {', '.join(REGISTRY)}") from e


# %% running


@dataclass(frozen=True)
class Outcome:
    """
    One evaluated sample; `verdict` is None when a φ-argument left the probe domain.
    """

    label: str
    nu: t.Optional[float]
    param: t.Dict[str, t.Any]
    verdict: t.Optional[Verdict]

    @property
    def skipped(self) -> bool:
        return self.verdict is None


def _evaluate(check: CheckSpec, label, case, nu, variant, param, tol) -> Outcome:
    try:
        verdict = check.run(case, nu, variant, param, tol)
    except ProbeDomainError as e:
        logger.warning(f"{check.check_id} skipped {label} at ν={nu}: {e}")
        return Outcome(label, nu, dict(param), None)
    return Outcome(label, nu, dict(param), verdict)


def _pick_nu(check: CheckSpec, nu: t.Optional[float], grid: t.Sequence[float], index: int) -> t.Optional[float]:
    if check.nu_domain is None:
        return None
    return nu if nu is not None and check.accepts_nu(nu) else grid[index % len(grid)]


def _dense_scalar_population(check: CheckSpec, config: SampleConfig, grid: t.Sequence[float]):
    for label, a, b, nu in tight_scalar_cases():
        if check.accepts_nu(nu):
            yield label, (a, b), nu
    for label, a, b in log_grid_pairs(config.audit_grid, config.scalar_range):
        for nu in grid:
            yield label, (a, b), nu


def _dense_matrix_population(check: CheckSpec, config: SampleConfig, grid: t.Sequence[float]):
    """Structured cases at their pinned ν (every grid ν if unpinned), then `audit_count` seeded samples."""
    for case in structured_cases(config.n):
        if check.nu_domain is None:
            yield case.label, case, None
        elif case.nu is not None and check.accepts_nu(case.nu):
            yield case.label, case, case.nu
        else:
            for nu in grid:
                yield case.label, case, nu
    for i, sample in enumerate(seeded_matrix_samples(config.seed, config.n, config.audit_count)):
        yield sample.label, sample, _pick_nu(check, None, grid, i)


def iter_outcomes(
    check: CheckSpec,
    config: SampleConfig,
    variant: "Variant | str | None" = None,
    param: t.Optional[t.Dict[str, t.Any]] = None,
    dense: bool = False,
) -> t.Iterator[Outcome]:
    """
    Evaluates one check, variant and parameter over the configured population. Samples outside the
    check's hypotheses (positive definiteness, Ky Fan k > n) are left out; ν is drawn from the part
    of the grid inside the check's ν-domain.

    With `dense`, the audit population is used instead: for scalar checks the tight cases and the
    audit_grid x audit_grid log grid at every ν, for matrix checks the structured cases swept over ν
    followed by audit_count seeded samples.
    """
    variant = check.resolve_variant(variant)
    param = param or {}
    tol = check.tolerance(config)
    grid = check.nu_grid(config.nu_grid) if check.nu_domain is not None else list(config.nu_grid)
    if not grid:
        logger.warning(f"No ν of the grid lies in the domain of '{check.check_id}'; nothing to evaluate")
        return

    if check.scalar:
        if dense:
            population = _dense_scalar_population(check, config, grid)
        else:
            population = ((label, (a, b), nu) for label, a, b, nu in scalar_samples(config.replace(nu_grid=grid)))
        for j, (label, case, nu) in enumerate(population):
            yield _evaluate(check, label, case, _pick_nu(check, nu, grid, j), variant, param, tol)
        return

    if dense:
        population = _dense_matrix_population(check, config, grid)
    else:
        population = ((s.label, s, nu) for s, nu in matrix_samples(config.replace(nu_grid=grid)))
    for j, (label, sample, nu) in enumerate(population):
        if check.requires_pd and not (sample.a.is_positive_definite and sample.b.is_positive_definite):
            continue
        if not _applies(param, sample.a.dim):
            continue
        yield _evaluate(check, label, sample, _pick_nu(check, nu, grid, j), variant, param, tol)


def evaluate_inputs(
    check_id: str,
    inputs: t.Mapping[str, t.Any],
    nu: t.Optional[float],
    variant: "Variant | str | None" = None,
    param: t.Optional[t.Dict[str, t.Any]] = None,
    tol: t.Optional[float] = None,
) -> Verdict:
    """
    Evaluates a check on explicit inputs: {"a", "b"} for scalar checks, {"A", "B"[, "X"]} for matrix
    checks (X defaults to the identity). Parameters may also be passed inside `inputs`.
    """
    check = get_check(check_id)
    param = dict(param or {})
    for key in ("norm", "m", "probe"):
        if key in inputs and key not in param:
            param[key] = inputs[key]
    for key, default in check.param_grid(SampleConfig(include_structured=False, count=0, scalar_count=0))[0].items():
        param.setdefault(key, default)

    if check.nu_domain is not None and nu is None:
        raise UsageError(f"'{check_id}' needs ν")
    variant = check.resolve_variant(variant)
    tol = tol if tol is not None else (check.tol or (SCALAR_TOL if check.scalar else MATRIX_TOL))

    if check.scalar:
        case = (float(inputs["a"]), float(inputs["b"]))
    else:
        a = HermitianPSD.from_matrix(inputs["A"])
        x = inputs.get("X")
        case = MatrixSample(
            label="inputs",
            a=a,
            b=HermitianPSD.from_matrix(inputs["B"]),
            x=as_matrix(np.eye(a.dim) if x is None else x),
        )
    return check.run(case, nu, variant, param, tol)
