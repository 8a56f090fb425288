"""File formats: sample CSV, coefficient JSON, grid CSV.

Sample CSV carries the header ``r,s,t,re,im`` with one row per lattice
index triple.  Coefficient JSON is a single object with the grid
parameters, the role of the coefficients and the coefficient list in
enumeration order.  All floats are written with 17 significant digits so
outputs are byte-reproducible and round-trip exactly.
"""

from __future__ import annotations

import json
from typing import TextIO

from .domain import GridSpec, enumerate_domain
from .transform import CoefficientSet, SampleSet


class FormatError(ValueError):
    """Malformed input file."""


def write_samples_csv(s: SampleSet, fh: TextIO) -> None:
    fh.write("r,s,t,re,im\n")
    for rst in s.keys():
        v = s.values[rst]
        fh.write(f"{rst[0]},{rst[1]},{rst[2]},{v.real:.17g},{v.imag:.17g}\n")


def read_samples_csv(grid: GridSpec, fh: TextIO) -> SampleSet:
    header = fh.readline().strip()
    if header != "r,s,t,re,im":
        raise FormatError(f"line 1: expected header 'r,s,t,re,im', got {header!r}")
    values = {}
    for lineno, line in enumerate(fh, start=2):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 5:
            raise FormatError(f"line {lineno}: expected 5 fields, got {len(parts)}")
        try:
            r, s_, t = int(parts[0]), int(parts[1]), int(parts[2])
            re, im = float(parts[3]), float(parts[4])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        values[(r, s_, t)] = complex(re, im)
    expected = set(enumerate_domain(0, grid.n - 1))
    if set(values) != expected:
        raise FormatError(
            f"sample keys do not match the N={grid.n} lattice "
            f"({len(values)} rows, expected {len(expected)})")
    return SampleSet(grid, values)


def write_coefficients_json(c: CoefficientSet, fh: TextIO) -> None:
    obj = {
        "N": c.grid.n,
        "M": c.m,
        "a": c.grid.a,
        "b": c.grid.b,
        "T": c.grid.period,
        "role": c.role,
        "coeffs": [
            {"k": k, "l": l, "m": m,
             "re": c.values[(k, l, m)].real, "im": c.values[(k, l, m)].imag}
            for (k, l, m) in c.keys()
        ],
    }
    json.dump(obj, fh, indent=1)
    fh.write("\n")


def read_coefficients_json(fh: TextIO) -> CoefficientSet:
    try:
        obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}: {exc.msg}") from None
    try:
        grid = GridSpec(obj["a"], obj["b"], obj["N"], obj["T"])
        role = obj["role"]
        m = obj["M"]
        coeffs = {(c["k"], c["l"], c["m"]): complex(c["re"], c["im"])
                  for c in obj["coeffs"]}
    except (KeyError, TypeError) as exc:
        raise FormatError(f"missing or malformed field: {exc}") from None
    if role not in ("beta", "c_alt", "c_std"):
        raise FormatError(f"unknown coefficient role {role!r}")
    out = CoefficientSet(grid, role, coeffs, m=m)
    if role in ("beta", "c_alt"):
        expected = set(out.keys())
        if set(coeffs) != expected:
            raise FormatError(
                f"coefficient keys do not match role {role!r} for N={grid.n}")
    return out
