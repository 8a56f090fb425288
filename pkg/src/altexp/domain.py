"""Semidominant index triples, the enumeration domain and shifted lattices.

An integer (or real) triple (k, l, m) is *semidominant* when k >= l >= m
or l > k > m.  Exactly one of the three cyclic rotations of any triple is
semidominant, so semidominant triples are canonical representatives of
cyclic label orbits.  The grids sampled here live inside the fundamental
region of the unit cube cut out by x > z and y > z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

IndexTriple = tuple  # (k, l, m), ints for lattice use, reals allowed for labels
Point3 = tuple       # (x, y, z)


def is_semidominant(t: Sequence) -> bool:
    """True iff the triple satisfies k >= l >= m or l > k > m."""
    k, l, m = t
    return (k >= l >= m) or (l > k > m)


def rotations(t: Sequence) -> list:
    """The three cyclic rotations of a label triple.

    (k, l, m) -> (m, k, l) -> (l, m, k); all three label the same function.
    """
    k, l, m = t
    return [(k, l, m), (m, k, l), (l, m, k)]


def canonicalize(t: Sequence) -> IndexTriple:
    """The unique semidominant cyclic rotation of ``t``."""
    hits = {r for r in rotations(t) if is_semidominant(r)}
    if len(hits) != 1:
        raise AssertionError(f"triple {t!r} has {len(hits)} semidominant rotations")
    return hits.pop()


@dataclass(frozen=True)
class DomainRange:
    """Integer range [n1, n2] over which semidominant triples are enumerated."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 > self.n2 + 1:
            raise ValueError(f"empty range must satisfy n1 <= n2 + 1, got {self}")


def enumerate_domain(n1: int, n2: int) -> list:
    """All semidominant triples with entries in {n1, ..., n2}.

    Ordered lexicographically ascending on (k, l, m).  For the range
    (0, N-1) the count is N(N^2 + 2)/3.
    """
    out = []
    rng = range(n1, n2 + 1)
    for k in rng:
        for l in rng:
            for m in rng:
                if is_semidominant((k, l, m)):
                    out.append((k, l, m))
    return out


def domain_size(n: int) -> int:
    """|D(0, N-1)| = N(N^2 + 2)/3."""
    return n * (n * n + 2) // 3


def weight_g(t: Sequence) -> int:
    """Orbit-size weight: 3 if k = l = m, else 1."""
    k, l, m = t
    return 3 if k == l == m else 1


@dataclass(frozen=True)
class GridSpec:
    """Shifted lattice parameters (a, b, N, T).

    Points are (a + (r+b)T/N, a + (s+b)T/N, a + (t+b)T/N) for (r, s, t)
    ranging over the semidominant triples with entries in {0, ..., N-1}.
    """

    a: float = 0.0
    b: float = 0.0
    n: int = 1
    period: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"grid density N must be >= 1, got {self.n}")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"fractional offset b must be in [0, 1], got {self.b}")
        if self.period <= 0:
            raise ValueError(f"period T must be positive, got {self.period}")

    @property
    def point_count(self) -> int:
        return domain_size(self.n)

    def point(self, rst: Sequence) -> Point3:
        r, s, t = rst
        h = self.period / self.n
        return (self.a + (r + self.b) * h,
                self.a + (s + self.b) * h,
                self.a + (t + self.b) * h)


def grid_points(g: GridSpec) -> list:
    """(index, point) pairs of the lattice, in enumeration order."""
    return [(rst, g.point(rst)) for rst in enumerate_domain(0, g.n - 1)]


def in_fundamental_domain(p: Sequence) -> bool:
    """Membership in the open region {(x,y,z) in (0,1)^3 : x > z, y > z}."""
    x, y, z = p
    return 0.0 < x < 1.0 and 0.0 < y < 1.0 and 0.0 < z < 1.0 and x > z and y > z


def write_grid_csv(g: GridSpec, fh: TextIO) -> None:
    """Grid export: header ``r,s,t,x,y,z``, coordinates at 17 significant digits."""
    fh.write("r,s,t,x,y,z\n")
    for (r, s, t), (x, y, z) in grid_points(g):
        fh.write(f"{r},{s},{t},{x:.17g},{y:.17g},{z:.17g}\n")
