import math

import numpy as np
import pytest

from young_heinz_sdk.core import (
    NumericalError,
    ProbeDomainError,
    DomainError,
    UsageError,
    Variant,
    inputs_digest,
    link_holds,
    make_verdict,
    signed_pow,
)


def test_link_holds_within_relative_tolerance():
    assert link_holds(1.0, 1.0 - 1e-13, 1e-12)
    assert not link_holds(1.0, 0.9, 1e-12)
    # scale is max(1, |lower|, |upper|)
    assert link_holds(1e6, 1e6 - 1e-7, 1e-12)
    assert not link_holds(1e6, 1e6 - 1e-5, 1e-12)


def test_link_holds_magnitude_widens_scale():
    assert not link_holds(0.0, -1e-9, 1e-12)
    assert link_holds(0.0, -1e-9, 1e-12, magnitude=1e4)


def test_make_verdict_slacks_and_min():
    verdict = make_verdict("demo", Variant.CORRECTED, [("lo", 1.0), ("mid", 2.0), ("hi", 2.0)], tol=1e-12, nu=0.3)
    assert verdict.slacks == [1.0, 0.0]
    assert verdict.min_slack == 0.0
    assert verdict.holds
    assert verdict.values() == [1.0, 2.0, 2.0]


def test_make_verdict_side_links_count():
    verdict = make_verdict(
        "demo", Variant.CORRECTED, [("lo", 0.0), ("hi", 1.0)], tol=1e-12, side_links=[("side", 3.0, 2.0)]
    )
    assert verdict.slacks == [1.0, -1.0]
    assert not verdict.holds


def test_make_verdict_rejects_bad_chains():
    with pytest.raises(ValueError):
        make_verdict("demo", Variant.CORRECTED, [("only", 1.0)], tol=1e-12)
    with pytest.raises(NumericalError):
        make_verdict("demo", Variant.CORRECTED, [("lo", 1.0), ("hi", math.nan)], tol=1e-12)


def test_verdict_to_dict_digest_is_hex():
    verdict = make_verdict("demo", Variant.PRINTED, [("lo", 0.0), ("hi", 1.0)], tol=1e-8, nu=0.5, inputs={"a": 1.0})
    data = verdict.to_dict()
    assert data["variant"] == "printed"
    assert len(data["inputs_digest"]) == 16
    assert int(data["inputs_digest"], 16) == verdict.inputs_digest


def test_inputs_digest_is_stable_and_sensitive():
    a = np.eye(2)
    assert inputs_digest(0.3, A=a) == inputs_digest(0.3, A=a.copy())
    assert inputs_digest(0.3, A=a) != inputs_digest(0.4, A=a)
    assert inputs_digest(0.3, A=a) != inputs_digest(0.3, A=2 * a)


def test_variant_parse():
    assert Variant.parse("PRINTED") is Variant.PRINTED
    assert Variant.parse(Variant.CORRECTED) is Variant.CORRECTED
    assert Variant.parse("derived") is Variant.DERIVED_FROM_THM22
    with pytest.raises(UsageError):
        Variant.parse("typo")


def test_convex_domain_error_is_domain_error():
    assert issubclass(ProbeDomainError, DomainError)


def test_signed_pow_keeps_sign_for_odd_powers():
    assert signed_pow(-2.0, 3) == -8.0
    assert signed_pow(-2.0, 2) == 4.0
