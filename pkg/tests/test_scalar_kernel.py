import math

import pytest
from hypothesis import given, reject, seed
from hypothesis import strategies as st

from young_heinz_sdk import scalar_kernel as sk
from young_heinz_sdk.core import DomainError, ProbeDomainError, Variant

TOL = 1e-9

positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)
open_nu = st.floats(min_value=0.01, max_value=0.99)


def test_nu_context_constants():
    ctx = sk.nu_context(0.3)
    assert ctx.r == pytest.approx(0.3)
    assert ctx.big_r == pytest.approx(0.7)
    assert ctx.r0 == pytest.approx(0.4)
    assert (ctx.k2, ctx.j4) == (0, 1)
    assert ctx.lower_half

    ctx = sk.nu_context(0.8)
    assert (ctx.k2, ctx.j4) == (1, 3)
    assert not ctx.lower_half


def test_nu_context_domain():
    with pytest.raises(DomainError):
        sk.nu_context(0.0)
    with pytest.raises(DomainError):
        sk.nu_context(1.5)
    assert sk.nu_context(0.0, allow_zero=True).r0 == 0.0


def test_s1_vanishes_at_half_and_on_the_diagonal():
    assert sk.s1(0.5, 2.0, 7.0) == 0.0
    assert sk.s1(0.3, 5.0, 5.0) == pytest.approx(0.0, abs=1e-12)


def test_young_refined_tight_at_half():
    chain = sk.young_refined(3.0, 12.0, 0.5)
    assert chain["y_plus"] == pytest.approx(chain["x"], rel=1e-12)
    assert chain["upper"] == pytest.approx(chain["x"], rel=1e-12)


def test_young_refined_printed_refinement_fails():
    # a = 1, b = 16, ν = 1/4: typeset S₁ pushes the lower bound to 6.25 > 4.75
    printed = sk.young_refined(1.0, 16.0, 0.25, Variant.PRINTED)
    assert printed["y_plus"] == pytest.approx(6.25)
    assert printed["x"] == pytest.approx(4.75)
    assert not printed.is_ordered(TOL)

    corrected = sk.young_refined(1.0, 16.0, 0.25, Variant.CORRECTED)
    assert corrected["y_plus"] == pytest.approx(4.75)
    assert corrected.is_ordered(TOL)


@seed(20170101)
@given(a=positive, b=positive, nu=st.floats(min_value=0.01, max_value=1.0))
def test_young_refined_corrected_holds(a, b, nu):
    assert sk.young_refined(a, b, nu).is_ordered(TOL)


@seed(20170101)
@given(a=positive, b=positive, nu=open_nu)
def test_young_squared_corrected_holds(a, b, nu):
    assert sk.young_squared(a, b, nu).is_ordered(TOL)


@seed(20170101)
@given(a=positive, b=positive, nu=open_nu)
def test_quadratic_gap_derived_holds(a, b, nu):
    assert sk.quadratic_gap_bounds(a, b, nu, Variant.DERIVED_FROM_THM22).is_ordered(TOL)


@pytest.mark.parametrize("a, b", [(1.0, 2.0), (0.01, 50.0), (300.0, 0.2), (7.0, 7.0)])
def test_quadratic_gap_printed_lower_exact_at_quarter(a, b):
    chain = sk.quadratic_gap_bounds(a, b, 0.25, Variant.PRINTED)
    assert chain["lower"] == pytest.approx(chain["gap"], rel=1e-10, abs=1e-12)


def test_quadratic_gap_rejects_corrected():
    with pytest.raises(DomainError):
        sk.quadratic_gap_bounds(1.0, 2.0, 0.3, Variant.CORRECTED)


def test_heinz_mean_endpoints():
    assert sk.heinz_mean(4.0, 9.0, 0.5) == pytest.approx(6.0)
    assert sk.heinz_mean(4.0, 9.0, 0.0) == pytest.approx(6.5)
    assert sk.heinz_mean(4.0, 9.0, 1.0) == pytest.approx(6.5)


def test_convex_function_parse_and_name():
    assert sk.ConvexProbe.parse("power:3").name == "power:3"
    assert sk.ConvexProbe.parse("power_half:5").m == 5
    assert sk.ConvexProbe.parse("exp").name == "exp"
    with pytest.raises(DomainError):
        sk.ConvexProbe.parse("log")
    with pytest.raises(DomainError):
        sk.ConvexProbe.power_half(1)


def test_leaving_phi_domain_raises():
    with pytest.raises(ProbeDomainError):
        sk.ConvexProbe.exp()(800.0)
    with pytest.raises(ProbeDomainError):
        sk.ConvexProbe.power(2)(-1.0)
    # rounding below zero is clamped
    assert sk.ConvexProbe.power(2)(-1e-15) == 0.0


@pytest.mark.parametrize("phi", sk.default_probes(), ids=lambda p: p.name)
def test_defaults_are_increasing_and_convex(phi):
    assert sk.verify_probe(phi, samples=200)


def _sandwich_or_skip(build, phi, a, b, nu):
    # a negative w leaves φ's domain; the runner counts that sample as skipped
    try:
        return build(phi, a, b, nu)
    except ProbeDomainError:
        reject()


@seed(20170101)
@given(a=positive, b=positive, nu=open_nu)
def test_phi_sandwich_hypotheses_and_chain(a, b, nu):
    sandwich = _sandwich_or_skip(sk.phi_sandwich, sk.ConvexProbe.power(2), a, b, nu)
    scale = max(a, b) ** 2
    for _, lo, hi in sandwich.hypotheses:
        assert hi - lo >= -TOL * max(1.0, abs(lo), abs(hi), max(a, b))
    for lo, hi in zip(sandwich.chain.values, sandwich.chain.values[1:]):
        assert hi - lo >= -TOL * max(1.0, scale)


@pytest.mark.parametrize("build, power, b", [(sk.phi_sandwich, 2, 17.0), (sk.heinz_sandwich, 1, 28.0)])
def test_sandwich_negative_w_leaves_domain(build, power, b):
    with pytest.raises(ProbeDomainError):
        build(sk.ConvexProbe.power(power), 1.0, b, 0.75)


def test_phi_sandwich_identity_matches_young_gap():
    sandwich = sk.phi_sandwich(sk.ConvexProbe.power(1), 2.0, 5.0, 0.3)
    gap = 0.7 * 2.0 + 0.3 * 5.0 - 2.0**0.7 * 5.0**0.3
    assert sandwich.chain["middle"] == pytest.approx(gap, rel=1e-12)


@seed(20170101)
@given(a=positive, b=positive, nu=st.floats(min_value=0.0, max_value=1.0))
def test_heinz_sandwich_chain(a, b, nu):
    sandwich = _sandwich_or_skip(sk.heinz_sandwich, sk.ConvexProbe.power(1), a, b, nu)
    assert sandwich.chain.is_ordered(TOL)


def test_lemma312_tight_with_zero_argument():
    chain = sk.lemma312_gap(1.0, 0.0, 0.3)
    assert chain["lhs"] == pytest.approx(1.0, abs=1e-12)
    assert chain["rhs"] == 1.0


@seed(20170101)
@given(a=positive, b=positive, nu=st.floats(min_value=0.0, max_value=1.0))
def test_lemma312_holds(a, b, nu):
    assert sk.lemma312_gap(a, b, nu).is_ordered(TOL)


@seed(20170101)
@given(a=positive, b=positive, nu=st.floats(min_value=0.01, max_value=0.5))
def test_squared_young_refined_holds(a, b, nu):
    assert sk.squared_young_refined(a, b, nu).is_ordered(TOL)


def test_squared_young_refined_upper_half_rejected():
    with pytest.raises(DomainError):
        sk.squared_young_refined(1.0, 2.0, 0.7)


@pytest.mark.parametrize("nu", [0.25, 0.5, 0.75])
def test_chains_tight_on_the_diagonal(nu):
    for chain in (sk.young_refined(7.0, 7.0, nu), sk.young_squared(7.0, 7.0, nu)):
        assert all(abs(s) <= 1e-12 * 49 for s in chain.slacks())


def test_s1_at_quarter():
    assert sk.s1(0.25, 16.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_phi_sandwich_square_values():
    chain = sk.phi_sandwich(sk.ConvexProbe.power(2), 4.0, 1.0, 0.25).chain
    assert chain["lower"] == pytest.approx(8 * math.sqrt(2) - 10.4375, abs=1e-12)
    assert chain["lower"] == pytest.approx(0.876, abs=1e-3)
    assert chain["middle"] == pytest.approx(2.5625, abs=1e-12)
    assert chain["upper"] == pytest.approx(9.8125 - 3 * math.sqrt(2), abs=1e-12)
    assert chain["upper"] == pytest.approx(5.57, abs=1e-2)


def test_heinz_sandwich_identity_values():
    chain = sk.heinz_sandwich(sk.ConvexProbe.power(1), 16.0, 1.0, 0.3).chain
    assert chain["lower"] == pytest.approx(3.7, abs=1e-12)
    assert chain["middle"] == pytest.approx(8.5 - (16**0.7 + 16**0.3) / 2, abs=1e-12)
    assert chain["upper"] == pytest.approx(7.3, abs=1e-12)


def test_printed_quadratic_gap_far_apart():
    chain = sk.quadratic_gap_bounds(1.0, 100.0, 0.45, Variant.PRINTED)
    assert chain["lower"] == pytest.approx(1992.8, abs=0.05)
    assert chain["gap"] == pytest.approx(45.55**2 - 100**0.9, rel=1e-12)
    assert chain["lower"] <= chain["gap"]
