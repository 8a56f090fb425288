import io

import numpy as np
import pytest
from hypothesis import given, strategies as st

from altexp.domain import (GridSpec, canonicalize, domain_size,
                           enumerate_domain, grid_points,
                           in_fundamental_domain, is_semidominant, rotations,
                           weight_g, write_grid_csv)
from altexp.functions import eval_E

N3_DOMAIN = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 2, 0),
             (2, 0, 0), (2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1), (2, 2, 2)]


def test_semidominant_examples():
    assert is_semidominant((2, 3, 1))       # middle-dominant clause
    assert is_semidominant((0, 0, 0))
    assert not is_semidominant((3, 1, 2))


def test_canonicalize_examples():
    assert canonicalize((1, 2, 3)) == (2, 3, 1)
    assert canonicalize((2, 1, 1)) == (2, 1, 1)
    assert canonicalize((1, 0, 1)) == (1, 1, 0)


@given(st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)))
def test_canonicalize_idempotent_and_semidominant(t):
    c = canonicalize(t)
    assert is_semidominant(c)
    assert canonicalize(c) == c


def test_exactly_one_rotation_semidominant_exhaustive():
    rng = range(-5, 6)
    for k in rng:
        for l in rng:
            for m in rng:
                hits = {r for r in rotations((k, l, m)) if is_semidominant(r)}
                assert len(hits) == 1


def test_canonicalize_preserves_function():
    rng = np.random.default_rng(7)
    for _ in range(25):
        t = tuple(rng.uniform(-4, 4, 3))
        p = rng.uniform(-1, 1, 3)
        assert eval_E(t, p) == pytest.approx(eval_E(canonicalize(t), p), abs=1e-13)


def test_enumerate_n3_matches_reference_list():
    assert enumerate_domain(0, 2) == N3_DOMAIN


def test_enumerate_edge_cases():
    assert enumerate_domain(0, 0) == [(0, 0, 0)]
    assert enumerate_domain(0, -1) == []
    assert len(enumerate_domain(0, 4)) == 45


@pytest.mark.parametrize("n", range(1, 21))
def test_enumerate_count_formula(n):
    assert len(enumerate_domain(0, n - 1)) == domain_size(n) == n * (n * n + 2) // 3


def test_weight_g():
    assert weight_g((1, 1, 1)) == 3
    assert weight_g((2, 1, 0)) == 1
    assert weight_g((0, 0, 0)) == 3


def test_grid_points_n3_reference():
    pts = grid_points(GridSpec(0, 0, 3))
    assert [rst for rst, _ in pts] == N3_DOMAIN
    coords = [p for _, p in pts]
    third = 1.0 / 3.0
    assert coords[0] == (0.0, 0.0, 0.0)
    assert coords[1] == (third, 0.0, 0.0)
    assert coords[-1] == (2 * third, 2 * third, 2 * third)


def test_grid_point_counts():
    assert len(grid_points(GridSpec(0, 0, 1))) == 1
    assert grid_points(GridSpec(0, 0, 1))[0][1] == (0.0, 0.0, 0.0)
    assert len(grid_points(GridSpec(0, 0.5, 7))) == 119


def test_grid_shift_and_period():
    g = GridSpec(0.25, 0.5, 2, period=2.0)
    (_, p0), *_ = grid_points(g)
    assert p0 == (0.25 + 0.5, 0.25 + 0.5, 0.25 + 0.5)


def test_gridspec_validation():
    with pytest.raises(ValueError):
        GridSpec(0, 0, 0)
    with pytest.raises(ValueError):
        GridSpec(0, 1.5, 3)
    with pytest.raises(ValueError):
        GridSpec(0, 0, 3, period=-1)
    GridSpec(0, 1.0, 3)  # b = 1 is allowed; no deduplication against b = 0


def test_fundamental_domain_predicate():
    assert in_fundamental_domain((0.5, 0.5, 0.1))
    assert not in_fundamental_domain((0.1, 0.5, 0.5))
    assert not in_fundamental_domain((1.0, 0.5, 0.1))
    assert not in_fundamental_domain((0.5, 0.5, 0.5))  # boundary x > z fails


def test_grid_csv_format():
    buf = io.StringIO()
    write_grid_csv(GridSpec(0, 0, 3), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "r,s,t,x,y,z"
    assert len(lines) == 12
    assert lines[1] == "0,0,0,0,0,0"
    assert lines[2].startswith("1,0,0,0.33333333333333331,")
