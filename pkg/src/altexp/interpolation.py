"""Trigonometric interpolation: alternating and standard 3D variants.

For odd N = 2M+1, samples on the shifted lattice determine a unique
interpolant

    psi(x, y, z) = sum over semidominant (k, l, m) in D(-M, M) of
                   c_{klm} E_{(k,l,m)}(x, y, z)

whose coefficients are the same weighted sums as the forward transform,
taken over the widened index range.  The coefficients can equivalently
be obtained by remapping forward-transform output (index shifts by N
plus a lattice-dependent phase); both paths are kept as mutual oracles.

The standard (non-alternating) interpolant on the full cubic N^3 grid is
included as a baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .domain import GridSpec, canonicalize, domain_size, enumerate_domain, weight_g
from .functions import eval_E, exponent_rotations
from .transform import (CoefficientSet, SampleSet, _separable_spectrum,
                        adft_forward_naive)


class ParityError(ValueError):
    """Interpolation requires an odd grid density N = 2M+1."""


def _require_odd(n: int) -> int:
    if n % 2 == 0:
        raise ParityError(f"interpolation requires odd N, got N={n}")
    return (n - 1) // 2


def alt_coefficient_count(m: int) -> int:
    """(2M+1)(4M^2 + 4M + 3)/3, equal to the lattice point count."""
    return (2 * m + 1) * (4 * m * m + 4 * m + 3) // 3


@dataclass
class InterpolantAlt:
    """Alternating interpolant: coefficients over D(-M, M) plus origin grid."""

    m: int
    coeffs: CoefficientSet
    period: float = 1.0

    @property
    def grid(self) -> GridSpec:
        return self.coeffs.grid

    def dense_exponents(self) -> np.ndarray:
        """Coefficients of plain exponentials e^{2 pi i (kx+ly+mz)}.

        A (2M+1)^3 cube indexed k, l, m in [-M, M] (offset by +M); each
        canonical coefficient is scattered onto its three label rotations.
        """
        n = 2 * self.m + 1
        cube = np.zeros((n, n, n), dtype=complex)
        for t, c in self.coeffs.values.items():
            for (k, l, mm) in exponent_rotations(t):
                cube[k + self.m, l + self.m, mm + self.m] += c
        return cube

    def __call__(self, p):
        return eval_psi_alt(self, p)


def alt_interpolate_direct(s: SampleSet, naive: bool = False) -> InterpolantAlt:
    """Interpolation coefficients by the defining weighted sums."""
    grid = s.grid
    m = _require_odd(grid.n)
    keys = enumerate_domain(-m, m)
    if naive:
        beta = adft_forward_naive(s, out_keys=keys)
        vals = beta.values
    else:
        freqs = np.arange(-m, m + 1)
        spec = _separable_spectrum(s, freqs)
        n3 = grid.n ** 3
        vals = {}
        for t in keys:
            acc = sum(spec[k + m, l + m, mm + m]
                      for (k, l, mm) in exponent_rotations(t))
            vals[t] = complex(acc / (weight_g(t) * n3))
    coeffs = CoefficientSet(grid, "c_alt", vals, m=m)
    return InterpolantAlt(m, coeffs, period=grid.period)


def remap_index(t: Sequence, m: int) -> tuple:
    """Forward-transform index whose coefficient feeds c at triple ``t``.

    Negative entries are lifted by N = 2M+1 and the result rotated to its
    semidominant representative inside D(0, N-1).
    """
    n = 2 * m + 1
    return canonicalize(tuple(c + n if c < 0 else c for c in t))


def _remap_phase(t: Sequence, grid: GridSpec) -> complex:
    # Lifting an index entry by N multiplies E on the lattice by
    # e^{2 pi i (N a + b)} per lifted slot; exact only when N a + b is an
    # integer (e.g. the unshifted lattice), hence the correction here.
    shifts = sum(1 for c in t if c < 0)
    cycles = (grid.n * grid.a / grid.period + grid.b) * shifts
    return complex(np.exp(2j * np.pi * cycles))


def remap_beta_to_c(c: CoefficientSet, m: int) -> CoefficientSet:
    """Convert forward-transform coefficients to interpolation coefficients."""
    if c.role != "beta":
        raise ValueError(f"remap needs role 'beta', got {c.role!r}")
    if c.grid.n != 2 * m + 1:
        raise ValueError(f"grid density {c.grid.n} does not match N=2M+1={2 * m + 1}")
    vals = {}
    for t in enumerate_domain(-m, m):
        vals[t] = _remap_phase(t, c.grid) * c.values[remap_index(t, m)]
    return CoefficientSet(c.grid, "c_alt", vals, m=m)


def alt_interpolate_remap(s: SampleSet) -> InterpolantAlt:
    """Interpolant via forward transform plus index remap."""
    from .transform import adft_forward
    m = _require_odd(s.grid.n)
    coeffs = remap_beta_to_c(adft_forward(s), m)
    return InterpolantAlt(m, coeffs, period=s.grid.period)


def eval_psi_alt(i: InterpolantAlt, p) -> complex:
    """Evaluate the alternating interpolant at point(s) p."""
    p = np.asarray(p, dtype=float) / i.period
    acc = np.zeros(p.shape[:-1], dtype=complex)
    for t, c in i.coeffs.values.items():
        acc = acc + c * np.asarray(eval_E(t, p))
    if acc.ndim == 0:
        return complex(acc)
    return acc


def eval_psi_alt_tensor(i: InterpolantAlt, xs, ys, zs) -> np.ndarray:
    """Evaluate on the tensor grid xs x ys x zs by separable contraction.

    Returns an array of shape (len(xs), len(ys), len(zs)); identical to
    pointwise evaluation but O((2M+1) n^3) instead of O(|coeffs| n^3).
    """
    cube = i.dense_exponents()
    freqs = np.arange(-i.m, i.m + 1)

    def table(coords):
        return np.exp(2j * np.pi * np.outer(np.asarray(coords) / i.period, freqs))

    out = np.tensordot(cube, table(zs), axes=([2], [1]))      # k, l, z
    out = np.tensordot(out, table(ys), axes=([1], [1]))       # k, z, y
    out = np.tensordot(out, table(xs), axes=([0], [1]))       # z, y, x
    return out.transpose(2, 1, 0)


@dataclass
class InterpolantStd:
    """Standard trigonometric interpolant: dense (2M+1)^3 coefficients."""

    m: int
    coeffs: np.ndarray                      # indexed k+M, l+M, m+M
    grid: GridSpec
    period: float = 1.0

    def __call__(self, p):
        return eval_psi_std(self, p)


def std_grid_points(grid: GridSpec):
    """1D coordinates of the full cubic lattice (shared along all axes)."""
    r = np.arange(grid.n)
    return grid.a + (r + grid.b) * (grid.period / grid.n)


def std_interpolate(grid: GridSpec, samples) -> InterpolantStd:
    """Interpolate samples on the full N^3 cubic lattice.

    ``samples`` is an (N, N, N) array indexed (r, s, t).  Coefficients
    are c_{klm} = N^{-3} sum f e^{-2 pi i (k x_r + l y_s + m z_t)}.
    """
    m = _require_odd(grid.n)
    f = np.asarray(samples, dtype=complex)
    if f.shape != (grid.n,) * 3:
        raise ValueError(f"expected samples of shape {(grid.n,) * 3}, got {f.shape}")
    coords = std_grid_points(grid) / grid.period
    table = np.exp(-2j * np.pi * np.outer(np.arange(-m, m + 1), coords))
    out = np.tensordot(table, f, axes=([1], [0]))             # k, s, t
    out = np.tensordot(table, out, axes=([1], [1]))           # l, k, t
    out = np.tensordot(table, out, axes=([1], [2]))           # m, l, k
    return InterpolantStd(m, out.transpose(2, 1, 0) / grid.n ** 3, grid,
                          period=grid.period)


def eval_psi_std(i: InterpolantStd, p) -> complex:
    p = np.asarray(p, dtype=float) / i.period
    freqs = np.arange(-i.m, i.m + 1)
    ex = np.exp(2j * np.pi * p[..., None] * freqs)            # ..., axis, k
    acc = np.tensordot(ex[..., 0, :], i.coeffs, axes=([-1], [0]))
    acc = np.einsum("...l,...lm->...m", ex[..., 1, :], acc)
    acc = np.einsum("...m,...m->...", ex[..., 2, :], acc)
    if acc.ndim == 0:
        return complex(acc)
    return acc


def rescale_to_period(i, period: float):
    """The same interpolant viewed on a domain of side ``period``.

    Evaluation at p then equals the original evaluation at p / (period/T_old).
    """
    if period <= 0:
        raise ValueError(f"period must be positive, got {period}")
    if isinstance(i, InterpolantAlt):
        return InterpolantAlt(i.m, i.coeffs, period=period)
    if isinstance(i, InterpolantStd):
        return InterpolantStd(i.m, i.coeffs, i.grid, period=period)
    raise TypeError(f"not an interpolant: {i!r}")
