"""Discrete orthogonality on shifted lattices and the alternating DFT.

Forward transform of samples f on the lattice:

    beta_{klm} = 1/(G_{klm} N^3) * sum over grid triples (r,s,t) of
                 G_{rst}^{-1} f(x_r, y_s, z_t) conj(E_{(k,l,m)}(x_r, y_s, z_t))

with G the orbit-size weight (3 on the diagonal, 1 otherwise).  The
inverse is the plain expansion f = sum beta_{klm} E_{(k,l,m)}.

Two forward paths are provided: a naive direct summation (the
correctness oracle) and an optimized path that factors the exponentials
through 1D phase tables and dense separable contractions.  They agree to
roundoff and the optimized one is used by default.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np

from .domain import GridSpec, enumerate_domain, weight_g
from .functions import eval_E, exponent_rotations


class MissingKeyError(KeyError):
    """A sample or coefficient set lacks a required index triple."""


@dataclass
class SampleSet:
    """Complex samples keyed by grid index triples over D(0, N-1)."""

    grid: GridSpec
    values: Dict[tuple, complex] = field(default_factory=dict)

    def keys(self):
        return enumerate_domain(0, self.grid.n - 1)

    def as_array(self) -> np.ndarray:
        """Values in enumeration order; raises if any key is absent."""
        out = np.empty(self.grid.point_count, dtype=complex)
        for i, key in enumerate(self.keys()):
            try:
                out[i] = self.values[key]
            except KeyError:
                raise MissingKeyError(f"sample set is missing grid triple {key}") from None
        return out

    @classmethod
    def from_array(cls, grid: GridSpec, arr) -> "SampleSet":
        keys = enumerate_domain(0, grid.n - 1)
        if len(arr) != len(keys):
            raise ValueError(f"expected {len(keys)} samples for N={grid.n}, got {len(arr)}")
        return cls(grid, dict(zip(keys, (complex(v) for v in arr))))

    @classmethod
    def from_function(cls, grid: GridSpec, fn) -> "SampleSet":
        return cls(grid, {rst: complex(fn(grid.point(rst)))
                          for rst in enumerate_domain(0, grid.n - 1)})


@dataclass
class CoefficientSet:
    """Transform coefficients keyed by semidominant triples.

    role "beta": keys over D(0, N-1) (forward-transform output);
    role "c_alt": keys over D(-M, M) with N = 2M+1 (interpolation);
    role "c_std": dense cube of standard trigonometric coefficients.
    """

    grid: GridSpec
    role: str
    values: Dict[tuple, complex] = field(default_factory=dict)
    m: int | None = None

    def keys(self):
        if self.role == "beta":
            return enumerate_domain(0, self.grid.n - 1)
        if self.role == "c_alt":
            return enumerate_domain(-self.m, self.m)
        raise ValueError(f"no canonical key order for role {self.role!r}")

    def as_array(self) -> np.ndarray:
        keys = self.keys()
        out = np.empty(len(keys), dtype=complex)
        for i, key in enumerate(keys):
            try:
                out[i] = self.values[key]
            except KeyError:
                raise MissingKeyError(f"coefficient set is missing triple {key}") from None
        return out


def _grid_index_arrays(n: int):
    idx = np.array(enumerate_domain(0, n - 1), dtype=int)
    ginv = np.array([1.0 / weight_g(t) for t in map(tuple, idx)])
    return idx, ginv


def _grid_coords(grid: GridSpec) -> np.ndarray:
    # Transforms work in unit-period pullback coordinates p / T, where
    # orthogonality on the lattice holds for any T.
    idx, _ = _grid_index_arrays(grid.n)
    return (grid.a / grid.period) + (idx + grid.b) / grid.n


def adft_forward_naive(s: SampleSet, out_keys=None) -> CoefficientSet:
    """Direct summation of the defining transform; O(P^2) in point count."""
    grid = s.grid
    f = s.as_array()
    pts = _grid_coords(grid)
    _, ginv = _grid_index_arrays(grid.n)
    wf = ginv * f
    keys = out_keys if out_keys is not None else enumerate_domain(0, grid.n - 1)
    n3 = grid.n ** 3
    vals = {}
    for t in keys:
        e = eval_E(t, pts)
        vals[t] = complex(np.sum(wf * np.conj(e)) / (weight_g(t) * n3))
    return CoefficientSet(grid, "beta", vals)


def _dense_weighted_samples(s: SampleSet) -> np.ndarray:
    """Scatter G^{-1} f onto the full N^3 cube (zeros off the domain)."""
    grid = s.grid
    f = s.as_array()
    idx, ginv = _grid_index_arrays(grid.n)
    cube = np.zeros((grid.n, grid.n, grid.n), dtype=complex)
    cube[idx[:, 0], idx[:, 1], idx[:, 2]] = ginv * f
    return cube

def _phase_table(grid: GridSpec, freqs: np.ndarray) -> np.ndarray:
    """Table[k, r] = e^{-2 pi i k x_r} over the full 1D lattice r = 0..N-1."""
    r = np.arange(grid.n)
    coords = (grid.a / grid.period) + (r + grid.b) / grid.n
    return np.exp(-2j * np.pi * np.outer(freqs, coords))


def _separable_spectrum(s: SampleSet, freqs: np.ndarray) -> np.ndarray:
    """F[k,l,m] = sum_{rst} G^{-1} f e^{-2 pi i (k x_r + l y_s + m z_t)}.

    Axis-by-axis contraction against the 1D phase table; cost O(K N^3)
    per axis instead of O(K^3 N^3) for the direct triple sum.
    """
    cube = _dense_weighted_samples(s)
    table = _phase_table(s.grid, freqs)
    out = np.tensordot(table, cube, axes=([1], [0]))          # k, s, t
    out = np.tensordot(table, out, axes=([1], [1]))           # l, k, t
    out = np.tensordot(table, out, axes=([1], [2]))           # m, l, k
    return out.transpose(2, 1, 0)                             # k, l, m


def adft_forward(s: SampleSet, naive: bool = False) -> CoefficientSet:
    """Alternating discrete Fourier transform of a complete sample set."""
    if naive:
        return adft_forward_naive(s)
    grid = s.grid
    n = grid.n
    freqs = np.arange(n)
    spec = _separable_spectrum(s, freqs)
    n3 = n ** 3
    vals = {}
    for t in enumerate_domain(0, n - 1):
        acc = sum(spec[r] for r in map(tuple, exponent_rotations(t)))
        vals[t] = complex(acc / (weight_g(t) * n3))
    return CoefficientSet(grid, "beta", vals)


def adft_inverse(c: CoefficientSet) -> SampleSet:
    """Expand beta coefficients back into samples on the originating grid."""
    if c.role != "beta":
        raise ValueError(f"inverse transform needs role 'beta', got {c.role!r}")
    grid = c.grid
    beta = c.as_array()
    pts = _grid_coords(grid)
    keys = enumerate_domain(0, grid.n - 1)
    f = np.zeros(len(pts), dtype=complex)
    for b, t in zip(beta, keys):
        f += b * eval_E(t, pts)
    return SampleSet.from_array(grid, f)


def discrete_gram(g: GridSpec) -> np.ndarray:
    """Weighted Gram matrix of the E functions on the lattice.

    Entry (i, j) = sum over grid of G_{rst}^{-1} E_i conj(E_j); equals
    diag(G_{klm} N^3) exactly for any lattice shift (a, b).
    """
    keys = enumerate_domain(0, g.n - 1)
    pts = _grid_coords(g)
    _, ginv = _grid_index_arrays(g.n)
    basis = np.stack([eval_E(t, pts) for t in keys])          # key x point
    return (basis * ginv) @ np.conj(basis.T)
