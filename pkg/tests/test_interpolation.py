import numpy as np
import pytest

from altexp.domain import GridSpec, domain_size, enumerate_domain
from altexp.functions import eval_E
from altexp.interpolation import (InterpolantAlt, ParityError,
                                  alt_coefficient_count,
                                  alt_interpolate_direct,
                                  alt_interpolate_remap, eval_psi_alt,
                                  eval_psi_alt_tensor, eval_psi_std,
                                  remap_beta_to_c, remap_index,
                                  rescale_to_period, std_grid_points,
                                  std_interpolate)
from altexp.transform import SampleSet, adft_forward


def paper_remap_table(k, l, m, big_m):
    """The six-case index table, transcribed literally for cross-checking."""
    n = 2 * big_m + 1
    if 0 <= k <= big_m and 0 <= l <= big_m and 0 <= m <= big_m:
        return (k, l, m)
    if 0 <= k <= big_m and 0 <= l <= big_m and k < l and -big_m <= m <= -1:
        return (l, m + n, k)
    if 0 <= k <= big_m and 0 <= l <= big_m and k >= l and -big_m <= m <= -1:
        return (m + n, k, l)
    if 0 <= k <= big_m and -big_m <= l <= -1:
        return (l + n, m + n, k)
    if -big_m <= k <= -1 and -big_m <= l <= -1:
        return (k + n, l + n, m + n)
    if -big_m <= k <= -1 and 0 <= l <= big_m:
        return (m + n, k + n, l)
    raise AssertionError((k, l, m))


def random_samples(grid, seed=0):
    rng = np.random.default_rng(seed)
    f = rng.normal(size=grid.point_count) + 1j * rng.normal(size=grid.point_count)
    return SampleSet.from_array(grid, f)


def grid_point_array(grid):
    return np.array([grid.point(rst) for rst in enumerate_domain(0, grid.n - 1)])


def test_constant_interpolates_to_third():
    g = GridSpec(0, 0.5, 3)
    interp = alt_interpolate_direct(SampleSet.from_function(g, lambda p: 1.0))
    assert interp.coeffs.values[(0, 0, 0)] == pytest.approx(1 / 3, abs=1e-13)
    others = [v for k, v in interp.coeffs.values.items() if k != (0, 0, 0)]
    assert max(abs(v) for v in others) < 1e-13
    assert eval_psi_alt(interp, (0.123, 0.456, 0.789)) == pytest.approx(1.0, abs=1e-12)


def test_basis_function_gives_delta_coefficients():
    g = GridSpec(0, 0.5, 5)
    t0 = (1, 2, -1)
    assert t0 in enumerate_domain(-2, 2)
    interp = alt_interpolate_direct(SampleSet.from_function(g, lambda p: eval_E(t0, p)))
    for k, v in interp.coeffs.values.items():
        assert v == pytest.approx(1.0 if k == t0 else 0.0, abs=1e-11)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_coefficient_count_formula(m):
    n = 2 * m + 1
    count = alt_coefficient_count(m)
    assert count == n * (4 * m * m + 4 * m + 3) // 3
    assert count == len(enumerate_domain(-m, m))
    assert count == domain_size(n)  # degrees of freedom match constraints


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_grid_residual(n):
    g = GridSpec(0, 0.5, n)
    s = random_samples(g, seed=n)
    interp = alt_interpolate_direct(s)
    resid = np.abs(eval_psi_alt(interp, grid_point_array(g)) - s.as_array())
    assert resid.max() < 1e-11


def test_even_n_rejected():
    g = GridSpec(0, 0, 4)
    with pytest.raises(ParityError):
        alt_interpolate_direct(random_samples(g))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_remap_equals_direct(n):
    g = GridSpec(0.13, 0.81, n)
    s = random_samples(g, seed=40 + n)
    direct = alt_interpolate_direct(s).coeffs
    remapped = alt_interpolate_remap(s).coeffs
    for k in direct.values:
        assert abs(direct.values[k] - remapped.values[k]) < 1e-12


def test_remap_index_matches_literal_table():
    for big_m in (1, 2, 3):
        for t in enumerate_domain(-big_m, big_m):
            assert remap_index(t, big_m) == paper_remap_table(*t, big_m)


@pytest.mark.parametrize("big_m", [1, 2, 3])
def test_remap_regions_partition_domain(big_m):
    # the remap must hit every forward-transform index exactly once
    n = 2 * big_m + 1
    images = [remap_index(t, big_m) for t in enumerate_domain(-big_m, big_m)]
    assert sorted(images) == enumerate_domain(0, n - 1)


def test_remap_is_identity_on_nonnegative_region():
    big_m = 2
    for t in enumerate_domain(0, big_m):
        assert remap_index(t, big_m) == t


def test_remap_dimension_mismatch():
    g = GridSpec(0, 0, 5)
    beta = adft_forward(random_samples(g))
    with pytest.raises(ValueError):
        remap_beta_to_c(beta, 1)


def test_eval_psi_zero_and_delta():
    g = GridSpec(0, 0, 3)
    interp = alt_interpolate_direct(SampleSet.from_function(g, lambda p: 0.0))
    assert eval_psi_alt(interp, (0.3, 0.7, 0.1)) == 0
    interp.coeffs.values[(0, 0, 0)] = 0.5
    assert eval_psi_alt(interp, (0.9, -0.2, 0.4)) == pytest.approx(1.5, abs=1e-13)


def test_psi_inherits_cyclic_symmetry():
    g = GridSpec(0, 0.5, 5)
    interp = alt_interpolate_direct(random_samples(g, seed=50))
    rng = np.random.default_rng(51)
    for _ in range(20):
        x, y, z = rng.uniform(-1, 1, 3)
        a = eval_psi_alt(interp, (x, y, z))
        assert eval_psi_alt(interp, (z, x, y)) == pytest.approx(a, abs=1e-12)


def test_tensor_eval_matches_pointwise():
    g = GridSpec(0, 0.5, 5)
    interp = alt_interpolate_direct(random_samples(g, seed=52))
    xs, ys, zs = np.linspace(0, 1, 4), np.linspace(0, 1, 3), np.linspace(0, 1, 5)
    tensor = eval_psi_alt_tensor(interp, xs, ys, zs)
    grid = np.stack(np.meshgrid(xs, ys, zs, indexing="ij"), axis=-1)
    assert np.abs(tensor - eval_psi_alt(interp, grid)).max() < 1e-12


def test_std_interpolation_constant_and_basis():
    g = GridSpec(0, 0.5, 3)
    interp = std_interpolate(g, np.ones((3, 3, 3)))
    assert interp.coeffs[1, 1, 1] == pytest.approx(1.0, abs=1e-13)
    assert np.abs(interp.coeffs).sum() == pytest.approx(1.0, abs=1e-12)

    coords = std_grid_points(g)
    xx, yy, zz = np.meshgrid(coords, coords, coords, indexing="ij")
    k0 = (1, -1, 0)
    f = np.exp(2j * np.pi * (k0[0] * xx + k0[1] * yy + k0[2] * zz))
    interp = std_interpolate(g, f)
    expected = np.zeros((3, 3, 3))
    expected[k0[0] + 1, k0[1] + 1, k0[2] + 1] = 1.0
    assert np.abs(interp.coeffs - expected).max() < 1e-12


def test_std_interpolation_grid_residual():
    rng = np.random.default_rng(53)
    g = GridSpec(0.2, 0.3, 3)
    f = rng.normal(size=(3, 3, 3)) + 1j * rng.normal(size=(3, 3, 3))
    interp = std_interpolate(g, f)
    coords = std_grid_points(g)
    for r in range(3):
        for s in range(3):
            for t in range(3):
                v = eval_psi_std(interp, (coords[r], coords[s], coords[t]))
                assert v == pytest.approx(f[r, s, t], abs=1e-11)


def test_std_even_n_rejected():
    with pytest.raises(ParityError):
        std_interpolate(GridSpec(0, 0, 2), np.ones((2, 2, 2)))


def test_rescale_to_period():
    g = GridSpec(0, 0.5, 3)
    interp = alt_interpolate_direct(random_samples(g, seed=54))
    same = rescale_to_period(interp, 1.0)
    assert eval_psi_alt(same, (0.3, 0.1, 0.9)) == eval_psi_alt(interp, (0.3, 0.1, 0.9))
    doubled = rescale_to_period(interp, 2.0)
    assert eval_psi_alt(doubled, (1, 1, 1)) == pytest.approx(
        eval_psi_alt(interp, (0.5, 0.5, 0.5)), abs=1e-13)
    with pytest.raises(ValueError):
        rescale_to_period(interp, 0.0)


def test_period_grid_consistency():
    # interpolating period-2 samples matches interpolating the unit pullback
    rng = np.random.default_rng(55)
    f = rng.normal(size=domain_size(3))
    g2 = GridSpec(0, 0.5, 3, period=2.0)
    g1 = GridSpec(0, 0.5, 3, period=1.0)
    i2 = alt_interpolate_direct(SampleSet.from_array(g2, f))
    i1 = rescale_to_period(alt_interpolate_direct(SampleSet.from_array(g1, f)), 2.0)
    p = (0.62, 1.38, 0.25)
    assert eval_psi_alt(i2, p) == pytest.approx(eval_psi_alt(i1, p), abs=1e-12)
    resid = [abs(eval_psi_alt(i2, g2.point(rst)) - v)
             for rst, v in zip(enumerate_domain(0, 2), f)]
    assert max(resid) < 1e-11
