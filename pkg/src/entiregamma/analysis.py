"""Zero isolation and structural checks for the entire factorials.

K has exactly one zero between 0 and 1/2 (near 0.0696) and then stays
positive until the digamma term can overpower the constant 1, which first
happens where psi(z) exceeds 2 pi -- just past exp(2 pi) = 535.49.  The
scans here locate those zeros; for large z they operate on the normalized
ratio K/gamma so nothing overflows.

The refined location of the first positive zero, frozen from a scan plus
bracket refinement at width tolerance 1e-15:

    FIRST_POSITIVE_ZERO = 0.06958027884482107
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from . import core, entire
from .core import TWO_PI, classify, sin_pi
from .errors import DomainError

__all__ = [
    "FIRST_POSITIVE_ZERO",
    "Bracket",
    "RootResult",
    "ScanReport",
    "ExtremumMatch",
    "EVALUATORS",
    "find_root",
    "normalized_k",
    "scan_zeros",
    "digamma_zeros_in",
    "extremum_match_report",
]

FIRST_POSITIVE_ZERO = 0.06958027884482107

_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class Bracket:
    """A sign-changing interval [lo, hi] with the function values at its ends."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise DomainError(f"bracket needs lo < hi, got [{self.lo!r}, {self.hi!r}]")
        if not (self.f_lo * self.f_hi < 0.0):
            raise DomainError(
                f"bracket endpoints must straddle zero, got f_lo={self.f_lo!r}, f_hi={self.f_hi!r}"
            )


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket: Bracket


@dataclass(frozen=True)
class ScanReport:
    interval: tuple[float, float]
    step: float
    roots: tuple[RootResult, ...]
    function_id: str


class ExtremumMatch(NamedTuple):
    z: float
    k_value: float
    gamma_value: float
    k_prime_value: float


def normalized_k(z: float) -> float:
    """K(z)/gamma(z) = 1 + sin(2 pi z)/(2 pi) * psi(z); z > 0 and Regular.

    Shares its zeros with K on the positive axis but stays O(1) where gamma
    overflows, which is what the large-argument scans need.
    """
    if not z > 0.0:
        raise DomainError(f"normalized_k requires z > 0, got {z!r}")
    if not classify(z).is_regular:
        raise DomainError(f"normalized_k requires a Regular argument, got z={z!r}")
    return 1.0 + sin_pi(2.0 * z) / TWO_PI * core.digamma(z)


EVALUATORS: dict[str, Callable[[float], float]] = {
    "k": entire.k,
    "k_prime": entire.k_prime,
    "hadamard": entire.hadamard,
    "gamma": core.gamma,
    "digamma": core.digamma,
    "q": entire.q_factor,
    "normalized_k": normalized_k,
}


def _resolve(f) -> Callable[[float], float]:
    if callable(f):
        return f
    try:
        return EVALUATORS[f]
    except KeyError:
        raise DomainError(f"unknown function id {f!r}; choose from {sorted(EVALUATORS)}") from None


def find_root(f, bracket: Bracket, tol: float = 1e-12) -> RootResult:
    """Refine a sign-changing bracket to a root.

    Bracketed secant (regula falsi with the Illinois weighting, which
    prevents the one-sided stall near steep endpoints) plus a bisection
    fallback whenever the interpolated point degenerates, so convergence
    is guaranteed.  Stops when |f| <= tol or the bracket width drops below
    1e-15 * max(1, |root|).
    """
    func = _resolve(f)
    if not (tol >= 0.0):
        raise DomainError(f"tolerance must be non-negative, got {tol!r}")
    lo, hi = bracket.lo, bracket.hi
    f_lo, f_hi = bracket.f_lo, bracket.f_hi  # may be Illinois-scaled below
    true_lo, true_hi = f_lo, f_hi

    best = lo if abs(true_lo) <= abs(true_hi) else hi
    best_f = true_lo if abs(true_lo) <= abs(true_hi) else true_hi
    side = 0
    iterations = 0
    for iterations in range(1, _MAX_ITERATIONS + 1):
        width_tol = 1e-15 * max(1.0, abs(best))
        if abs(best_f) <= tol or (hi - lo) <= width_tol:
            break
        x = (f_hi * lo - f_lo * hi) / (f_hi - f_lo)
        if not (lo < x < hi):
            x = 0.5 * (lo + hi)
        if x == lo or x == hi:  # bracket down to adjacent floats
            x = 0.5 * (lo + hi)
            if x == lo or x == hi:
                break
        fx = func(x)
        if abs(fx) < abs(best_f):
            best, best_f = x, fx
        if fx == 0.0:
            break
        if (fx > 0.0) == (true_hi > 0.0):
            hi, f_hi, true_hi = x, fx, fx
            if side == +1:
                f_lo *= 0.5
            side = +1
        else:
            lo, f_lo, true_lo = x, fx, fx
            if side == -1:
                f_hi *= 0.5
            side = -1
    return RootResult(root=best, residual=best_f, iterations=iterations, bracket=bracket)


def scan_zeros(f, lo: float, hi: float, step: float) -> ScanReport:
    """Sample [lo, hi] at the given step and refine every sign change found.

    Deterministic: samples are taken at lo + i*step (the last one clamped to
    hi) and roots are reported in ascending order.
    """
    func = _resolve(f)
    fid = f if isinstance(f, str) else getattr(f, "__name__", "<callable>")
    if not (lo < hi):
        raise DomainError(f"scan range needs lo < hi, got [{lo!r}, {hi!r}]")
    if not (0.0 < step <= 0.05):
        raise DomainError(f"step must be in (0, 0.05] to resolve the oscillation, got {step!r}")

    count = math.ceil((hi - lo) / step)
    xs = [min(lo + i * step, hi) for i in range(count + 1)]
    if xs[-1] < hi:
        xs.append(hi)

    roots: list[RootResult] = []
    prev_x, prev_f = xs[0], func(xs[0])
    for i in range(1, len(xs)):
        x = xs[i]
        if x == prev_x:
            continue
        fx = func(x)
        if fx == 0.0:
            # exact sample hit: bracket with the flanking samples
            nxt = xs[i + 1] if i + 1 < len(xs) else x + step
            fn = func(nxt)
            roots.append(
                RootResult(root=x, residual=0.0, iterations=0,
                           bracket=Bracket(prev_x, nxt, prev_f, fn))
            )
        elif prev_f != 0.0 and (fx > 0.0) != (prev_f > 0.0):
            roots.append(find_root(func, Bracket(prev_x, x, prev_f, fx)))
        prev_x, prev_f = x, fx
    return ScanReport(interval=(lo, hi), step=step, roots=tuple(roots), function_id=str(fid))


def digamma_zeros_in(lo: float, hi: float) -> list[float]:
    """All zeros of digamma inside [lo, hi] (one per interval between poles).

    Digamma is strictly increasing between consecutive poles, from -inf to
    +inf on each negative-axis interval and from -inf at 0+ on the positive
    axis, so each candidate interval holds exactly one simple zero.
    """
    margin = 1e-9
    zeros: list[float] = []
    # positive axis: the single zero sits in (1, 2)
    if hi > margin:
        a, b = max(lo, margin), hi
        if a < b:
            fa, fb = core.digamma(a), core.digamma(b)
            if fa < 0.0 < fb:
                zeros.append(find_root("digamma", Bracket(a, b, fa, fb), tol=0.0).root)
    # one zero in each (-m-1, -m); stop once the interval falls left of lo
    m = 0
    while -float(m) > lo:
        a = max(lo, -(m + 1.0) + margin)
        b = min(hi, -float(m) - margin)
        if a < b:
            fa, fb = core.digamma(a), core.digamma(b)
            if fa < 0.0 < fb:
                zeros.append(find_root("digamma", Bracket(a, b, fa, fb), tol=0.0).root)
        m += 1
    return sorted(zeros)


def extremum_match_report(lo: float, hi: float) -> list[ExtremumMatch]:
    """Where K and gamma touch: digamma zeros (gamma extrema) and half-integers.

    Returns (z, K(z), gamma(z), K'(z)) for every such point in [lo, hi],
    ascending in z.
    """
    if not (lo < hi):
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if lo < -20.0 or hi > 20.0:
        raise DomainError("extremum report is supported on [-20, 20]")
    points = list(digamma_zeros_in(lo, hi))
    m = math.ceil(2.0 * lo)
    if m % 2 == 0:
        m += 1
    while m / 2.0 <= hi:
        points.append(m / 2.0)
        m += 2
    rows = [
        ExtremumMatch(z=z, k_value=entire.k(z), gamma_value=core.gamma(z),
                      k_prime_value=entire.k_prime(z))
        for z in sorted(points)
    ]
    return rows
