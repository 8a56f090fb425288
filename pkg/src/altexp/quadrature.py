"""Midpoint quadrature over the fundamental region and error estimates.

The region is the part of the unit cube with x > z and y > z (volume
1/3).  Integration uses an axis-aligned midpoint rule with a membership
indicator; cell sums rely on numpy's pairwise summation, so results are
deterministic and independent of any threading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .domain import weight_g
from .functions import eval_E
from .interpolation import InterpolantAlt, eval_psi_alt_tensor


@dataclass(frozen=True)
class BumpParams:
    """Smooth characteristic function of a ball: radii and center."""

    alpha: float
    beta: float
    center: tuple

    def __post_init__(self):
        if not 0 < self.alpha < self.beta:
            raise ValueError(f"radii must satisfy 0 < alpha < beta, got {self}")


def bump(params: BumpParams, p) -> float:
    """1 inside radius alpha, 0 outside beta, smooth rolloff between.

    The transition value at relative radius q = (r - alpha)/(beta - alpha)
    is e * exp(1/(q^2 - 1)), which is 1 at q=0 and decays to 0 at q=1.
    ``p`` may be a point or an (..., 3) array.
    """
    p = np.asarray(p, dtype=float)
    d = p - np.asarray(params.center, dtype=float)
    r = np.sqrt(np.sum(d * d, axis=-1))
    q = (r - params.alpha) / (params.beta - params.alpha)
    out = np.zeros_like(r)
    out[r < params.alpha] = 1.0
    mid = (r >= params.alpha) & (r <= params.beta) & (q < 1.0)
    out[mid] = math.e * np.exp(1.0 / (q[mid] ** 2 - 1.0))
    if out.ndim == 0:
        return float(out)
    return out


def _midpoints(n: int) -> np.ndarray:
    return (np.arange(n) + 0.5) / n


def integrate_over_F(fn: Callable, n: int):
    """Midpoint-rule integral of ``fn`` over {x > z, y > z} in the cube.

    ``fn`` must accept an (..., 3) array of points and return values of
    matching leading shape.  Cell centers failing the membership test
    contribute nothing; each counted cell carries weight 1/n^3.
    """
    if n < 1:
        raise ValueError(f"subdivision count must be >= 1, got {n}")
    u = _midpoints(n)
    x = u[:, None]
    y = u[None, :]
    slab_sums = []
    pts = np.empty((n, n, 3))
    for t, z in enumerate(u):
        pts[..., 0] = x
        pts[..., 1] = y
        pts[..., 2] = z
        vals = np.asarray(fn(pts))
        mask = (x > z) & (y > z)
        slab_sums.append(np.sum(vals * mask))
    return np.sum(np.asarray(slab_sums)) / n ** 3


def interpolation_error(f: Callable, interp: InterpolantAlt, n: int) -> float:
    """Integral of |f - psi|^2 over the fundamental region.

    The interpolant is evaluated slab-by-slab through its separable
    tensor-grid path, so the cost is linear in the cell count.
    """
    u = _midpoints(n)
    x = u[:, None]
    y = u[None, :]
    slab_sums = []
    pts = np.empty((n, n, 3))
    chunk = max(1, (1 << 22) // (n * n))
    for lo in range(0, n, chunk):
        zs = u[lo:lo + chunk]
        psi = eval_psi_alt_tensor(interp, u, u, zs)
        for j, z in enumerate(zs):
            pts[..., 0] = x
            pts[..., 1] = y
            pts[..., 2] = z
            diff = np.abs(np.asarray(f(pts)) - psi[..., j]) ** 2
            mask = (x > z) & (y > z)
            slab_sums.append(np.sum(diff * mask))
    return float(np.sum(np.asarray(slab_sums)) / n ** 3)


def continuous_gram_entry(t: Sequence, tp: Sequence, n: int) -> complex:
    """Quadrature estimate of the overlap of E_t and E_t' on the region.

    Converges to weight_g(t) when t = t' and to 0 otherwise.
    """
    def integrand(pts):
        return eval_E(t, pts) * np.conj(eval_E(tp, pts))

    return complex(integrate_over_F(integrand, n))


def fundamental_volume(n: int) -> float:
    """Quadrature estimate of the region volume (exactly 1/3 in the limit)."""
    return float(integrate_over_F(lambda pts: np.ones(pts.shape[:-1]), n))
