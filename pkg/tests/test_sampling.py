import json

import numpy as np
import pytest

from young_heinz_sdk.core import DomainError
from young_heinz_sdk.sampling import (
    DEFAULT_SEED,
    SampleConfig,
    default_nu_grid,
    gen_psd,
    gen_scalars,
    log_grid_pairs,
    matrix_samples,
    mix,
    parse_nu_grid,
    scalar_samples,
    seeded_matrix_samples,
    structured_cases,
    tight_scalar_cases,
)


def test_default_grid():
    grid = default_nu_grid()
    assert len(grid) == 99
    assert grid[0] == 0.01 and grid[-1] == 0.99
    assert 0.25 in grid and 0.5 in grid and 0.75 in grid


def test_parse_nu_grid():
    assert parse_nu_grid("0.1, 0.25,0.5") == [0.1, 0.25, 0.5]
    assert parse_nu_grid("0:1:5") == [0.0, 0.25, 0.5, 0.75, 1.0]
    with pytest.raises(DomainError):
        parse_nu_grid("a,b")
    with pytest.raises(DomainError):
        parse_nu_grid("0.5,1.5")


def test_mix_is_deterministic_and_spreads():
    assert mix(DEFAULT_SEED, 3) == mix(DEFAULT_SEED, 3)
    assert len({mix(DEFAULT_SEED, i) for i in range(100)}) == 100
    assert mix(DEFAULT_SEED, 0) != mix(DEFAULT_SEED + 1, 0)


def test_gen_scalars_in_range():
    values = gen_scalars(5, 1000, (1e-3, 1e3))
    assert np.all(values >= 1e-3) and np.all(values <= 1e3)
    np.testing.assert_array_equal(values, gen_scalars(5, 1000, (1e-3, 1e3)))


def test_gen_psd_is_positive_definite():
    a = gen_psd(42, 5)
    assert a.dim == 5
    assert a.is_positive_definite


def test_seeded_samples_reproducible():
    first = list(seeded_matrix_samples(DEFAULT_SEED, 3, 4))
    second = list(seeded_matrix_samples(DEFAULT_SEED, 3, 4))
    assert [s.label for s in first] == ["seed:0", "seed:1", "seed:2", "seed:3"]
    for left, right in zip(first, second):
        np.testing.assert_array_equal(left.a.matrix, right.a.matrix)
        np.testing.assert_array_equal(left.x, right.x)


def test_matrix_samples_structured_first_and_nu_cycles():
    config = SampleConfig(n=2, count=5, nu_grid=[0.2, 0.4])
    pairs = list(matrix_samples(config))
    structured = structured_cases(2)
    assert len(pairs) == len(structured) + 5
    assert pairs[0][0].label == "scalar:identity" and pairs[0][1] == 0.3
    assert [nu for _, nu in pairs[len(structured):]] == [0.2, 0.4, 0.2, 0.4, 0.2]


def test_structured_cases_shapes():
    cases = structured_cases(3)
    labels = [case.label for case in cases]
    assert labels[0] == "scalar:identity"
    assert {"identity", "equal-pair", "rank-deficient", "near-singular"} <= set(labels)
    by_label = {case.label: case for case in cases}
    assert not by_label["rank-deficient"].a.is_positive_definite
    assert by_label["near-singular"].a.is_positive_definite
    assert all(case.a.dim == 1 for case in cases if case.label.startswith("scalar:"))
    with pytest.raises(DomainError):
        structured_cases(0)


def test_scalar_samples_count():
    config = SampleConfig(scalar_count=10)
    samples = list(scalar_samples(config))
    assert len(samples) == len(tight_scalar_cases()) + 10
    assert len(list(scalar_samples(config.replace(include_structured=False)))) == 10


def test_log_grid_pairs():
    pairs = list(log_grid_pairs(3, (1e-2, 1e2)))
    assert len(pairs) == 9
    assert pairs[0] == ("grid:0,0", pytest.approx(1e-2), pytest.approx(1e-2))
    assert pairs[4][1] == pytest.approx(1.0)


def test_config_validation():
    with pytest.raises(DomainError):
        SampleConfig(n=0)
    with pytest.raises(DomainError):
        SampleConfig(scalar_range=(1.0, 0.5))
    with pytest.raises(DomainError):
        SampleConfig.from_dict({"seeds": 1})
    assert SampleConfig(nu_grid="0.25,0.75").nu_grid == [0.25, 0.75]


def test_config_from_yaml_file_with_overrides(tmp_path):
    path = tmp_path / "harness.yml"
    path.write_text("seed: 7\nn: 3\nnorms: [hs, op]\nm_values: [1, 2]\n")
    config = SampleConfig.from_file(path, n=5, count=None)
    assert config.seed == 7
    assert config.n == 5
    assert config.count == 1000
    assert config.norms == ["hs", "op"]


def test_config_from_json_file(tmp_path):
    path = tmp_path / "harness.json"
    path.write_text(json.dumps({"seed": 11, "nu_grid": [0.5]}))
    config = SampleConfig.from_file(path)
    assert config.seed == 11 and config.nu_grid == [0.5]


def test_config_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        SampleConfig.from_file(tmp_path / "absent.yml")


def test_config_dict_round_trip():
    config = SampleConfig(seed=3, n=2, nu_grid=[0.5])
    assert SampleConfig.from_dict(config.to_dict()) == config
