import numpy as np
import pytest

from young_heinz_sdk.core import DomainError
from young_heinz_sdk.norms import NormKind, NormSpec, all_default_specs, applicable_specs, hs_norm_sq, norm
from young_heinz_sdk.sampling import gen_matrix


@pytest.mark.parametrize("text", ["hs", "trace", "op", "kyfan:1", "kyfan:n", "schatten:3", "schatten:2.5"])
def test_parse_and_str(text):
    assert str(NormSpec.parse(text)) == text


@pytest.mark.parametrize("text", ["frobenius", "kyfan", "kyfan:0", "schatten:0.5", "hs:2", "schatten:x"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        NormSpec.parse(text)


def test_default_family():
    specs = all_default_specs()
    assert len(specs) == 8
    assert [str(s) for s in specs] == ["hs", "trace", "op", "kyfan:1", "kyfan:2", "kyfan:n", "schatten:3", "schatten:4"]
    assert [str(s) for s in applicable_specs(specs, (1, 1))] == [
        "hs",
        "trace",
        "op",
        "kyfan:1",
        "kyfan:n",
        "schatten:3",
        "schatten:4",
    ]


def test_diagonal_values():
    d = np.diag([3.0, -4.0])
    assert norm("hs", d) == pytest.approx(5.0)
    assert hs_norm_sq(d) == pytest.approx(25.0)
    assert norm("trace", d) == pytest.approx(7.0)
    assert norm("op", d) == pytest.approx(4.0)
    assert norm("kyfan:1", d) == pytest.approx(4.0)
    assert norm("kyfan:n", d) == pytest.approx(7.0)
    assert norm("schatten:3", d) == pytest.approx((27.0 + 64.0) ** (1 / 3))


def test_kyfan_larger_than_dimension():
    with pytest.raises(DomainError):
        norm(NormSpec.ky_fan(3), np.eye(2))


@pytest.mark.parametrize("spec", all_default_specs(), ids=str)
def test_unitary_invariance_and_triangle(spec):
    x, y = gen_matrix(1, 4, 4), gen_matrix(2, 4, 4)
    u, _ = np.linalg.qr(gen_matrix(3, 4, 4))
    assert norm(spec, u @ x @ u.conj().T) == pytest.approx(norm(spec, x), rel=1e-10)
    assert norm(spec, x + y) <= norm(spec, x) + norm(spec, y) + 1e-10


def test_schatten_zero_matrix():
    assert norm(NormSpec.schatten(3), np.zeros((2, 2))) == 0.0
    assert NormSpec.schatten(4).kind is NormKind.SCHATTEN
