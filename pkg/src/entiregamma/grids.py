"""Grid sampling and delimited output for the CLI.

Output is byte-deterministic: floats are rendered with the shortest
representation that round-trips (never more than 17 significant digits),
integral values drop the trailing ``.0``, and pole cells of non-entire
functions are the literal ``nan``.  Lines end with LF and carry no
trailing delimiter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable

import numpy as np

from . import core, entire
from .errors import DomainError

__all__ = [
    "GridSpec",
    "SampleRow",
    "FUNCTION_IDS",
    "resolve_function",
    "format_value",
    "sample_grid",
    "write_grid_csv",
    "FIGURE_PANELS",
    "figure_spec",
]

FUNCTION_IDS = (
    "gamma",
    "loggamma",
    "digamma",
    "trigamma",
    "q",
    "hadamard",
    "k",
    "kprime",
    "family",
    "extra",
)

_PLAIN = {
    "gamma": core.gamma,
    "loggamma": core.log_gamma,
    "digamma": core.digamma,
    "trigamma": core.trigamma,
    "q": entire.q_factor,
    "hadamard": entire.hadamard,
    "k": entire.k,
    "kprime": entire.k_prime,
    "extra": entire.k_recurrence_extra,
}


def resolve_function(fid: str, g_coefficients: Iterable[float] = ()) -> Callable[[float], float]:
    """Map a CLI function id to a callable.

    ``family`` takes its polynomial exponent either from ``g_coefficients``
    or inline as ``family(a0,a1,...)``.
    """
    name = fid.strip()
    if name in _PLAIN:
        return _PLAIN[name]
    coeffs = tuple(float(c) for c in g_coefficients)
    if name.startswith("family(") and name.endswith(")"):
        inner = name[len("family("):-1].strip()
        coeffs = tuple(float(p) for p in inner.split(",")) if inner else ()
        name = "family"
    if name == "family":
        spec = entire.EntireFamilySpec(g_coefficients=coeffs)
        return partial(entire.family_member, spec=spec)
    raise DomainError(f"unknown function id {fid!r}; choose from {FUNCTION_IDS}")


@dataclass(frozen=True)
class GridSpec:
    function_ids: tuple[str, ...]
    lo: float
    hi: float
    points: int
    output_path: str

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise DomainError(f"grid needs lo < hi, got [{self.lo!r}, {self.hi!r}]")
        if self.points < 2:
            raise DomainError(f"grid needs at least two points, got {self.points}")
        if not self.function_ids:
            raise DomainError("grid needs at least one function id")


@dataclass(frozen=True)
class SampleRow:
    z: float
    values: tuple[float, ...]


def format_value(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if x == 0.0:
        return "0"
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def sample_grid(spec: GridSpec):
    """Yield one SampleRow per grid point, poles of non-entire functions as NaN."""
    funcs = [resolve_function(fid) for fid in spec.function_ids]
    for z in np.linspace(spec.lo, spec.hi, spec.points):
        z = float(z)
        values = []
        for fn in funcs:
            try:
                values.append(fn(z))
            except DomainError:  # pole or out-of-domain cell
                values.append(math.nan)
        yield SampleRow(z=z, values=tuple(values))


def write_grid_csv(spec: GridSpec) -> None:
    header = "z," + ",".join(fid.split("(")[0] for fid in spec.function_ids)
    with open(spec.output_path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in sample_grid(spec):
            cells = [format_value(row.z)] + [format_value(v) for v in row.values]
            fh.write(",".join(cells) + "\n")


# Reconstructed plotting windows: four poles' worth of structure on the
# left, the shared extremum near z = -3/2 on the right.
FIGURE_PANELS = {
    "left": (("gamma", "hadamard", "k"), -4.2, 4.2, 1681),
    "right": (("gamma", "k"), -1.9, -1.1, 801),
}


def figure_spec(panel: str, output_path: str) -> GridSpec:
    try:
        fids, lo, hi, points = FIGURE_PANELS[panel]
    except KeyError:
        raise DomainError(f"panel must be 'left' or 'right', got {panel!r}") from None
    return GridSpec(function_ids=fids, lo=lo, hi=hi, points=points, output_path=output_path)
