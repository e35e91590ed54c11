"""Entire factorial functions built on the gamma/digamma core.

Two pole-free extensions of the factorial are provided: the classical
Hadamard gamma

    H(z) = gamma(z) * (1 + Q(z)),
    Q(z) = sin(pi z)/(2 pi) * (psi(z/2) - psi((z+1)/2)),

and the single-digamma variant

    K(z) = gamma(z) * (1 + sin(2 pi z)/(2 pi) * psi(z)),

which also matches gamma at every half-integer.  Both are finite on the
whole real line: at a non-positive integer the gamma pole meets a matching
zero of the bracket.  Evaluating the bracket directly near such a point
cancels catastrophically, so inside the classification switch radius the
functions are rewritten in factored form using the exact identities

    gamma(-m + e) = gamma(1 + e) / (e * prod_{j=1..m} (e - j)),
    psi(-m + e)   = psi(1 + e) - 1/e + sum_{j=1..m} 1/(j - e),

which leave nothing to cancel.  The only series involved are the Maclaurin
expansions of sin(a e)/(a e) and (1 - sin(a e)/(a e))/e for small |e|.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import core
from .core import PI, TWO_PI, PoleKind, classify, cos_pi, sin_pi
from .errors import DomainError, OverflowSignal

__all__ = [
    "NearPoleContext",
    "EntireFamilySpec",
    "near_pole_context",
    "q_factor",
    "hadamard",
    "k",
    "k_alt",
    "k_prime",
    "entire_product",
    "family_member",
    "k_recurrence_extra",
    "h_recurrence_residual",
]

# Above this pole index the explicit sums/products are replaced by the
# equivalent digamma/gamma closed forms (loop-free; gamma_factor underflows
# to zero anyway once m! overflows).
_LOOP_LIMIT = 64

# Maclaurin series below, direct trig above.  At the boundary the degree-8
# truncation of sin(a e)/(a e) is off by < 1e-19 relative for a = 2 pi.
_SERIES_RADIUS = 1e-2


def _sinc(a: float, eps: float) -> float:
    """sin(a*eps)/(a*eps), exactly 1 at eps = 0."""
    if abs(eps) > _SERIES_RADIUS:
        return math.sin(a * eps) / (a * eps)
    x2 = (a * eps) ** 2
    return 1.0 + x2 * (-1.0 / 6 + x2 * (1.0 / 120 + x2 * (-1.0 / 5040 + x2 / 362880)))


def _sinc_deficit(a: float, eps: float) -> float:
    """(1 - sinc(a, eps))/eps, the pole-cancellation remainder; 0 at eps = 0."""
    if abs(eps) > _SERIES_RADIUS:
        return (1.0 - math.sin(a * eps) / (a * eps)) / eps
    a2 = a * a
    x2 = (a * eps) ** 2
    return a2 * eps * (1.0 / 6 + x2 * (-1.0 / 120 + x2 * (1.0 / 5040 - x2 / 362880)))


def _sinc_prime(a: float, eps: float) -> float:
    """d/d eps of sinc(a, eps)."""
    if eps == 0.0:
        return 0.0
    if abs(eps) > _SERIES_RADIUS:
        return (math.cos(a * eps) - math.sin(a * eps) / (a * eps)) / eps
    a2 = a * a
    x2 = (a * eps) ** 2
    return a2 * eps * (-1.0 / 3 + x2 * (1.0 / 30 + x2 * (-1.0 / 840 + x2 / 45360)))


def _sinc_deficit_prime(a: float, eps: float) -> float:
    """d/d eps of _sinc_deficit(a, eps)."""
    if abs(eps) > _SERIES_RADIUS:
        q = math.sin(a * eps) / (a * eps)
        return -_sinc_prime(a, eps) / eps - (1.0 - q) / (eps * eps)
    a2 = a * a
    x2 = (a * eps) ** 2
    return a2 * (1.0 / 6 + x2 * (-3.0 / 120 + x2 * (5.0 / 5040 - 7.0 * x2 / 362880)))


@dataclass(frozen=True)
class NearPoleContext:
    """Exact pole-extracted pieces for evaluating near z = -m + epsilon.

    ``regular_digamma`` is R(e) = psi(1+e) + sum_{j<=m} 1/(j-e), the digamma
    with its pole removed: psi(-m+e) = R(e) - 1/e.  ``gamma_factor`` carries
    the gamma pole: gamma(-m+e) = gamma_factor/e.  ``sinc_factor`` is
    sin(2 pi e)/(2 pi e).
    """

    m: int
    epsilon: float
    regular_digamma: float
    sinc_factor: float
    gamma_factor: float


def _regular_digamma(m: int, eps: float) -> float:
    if m <= _LOOP_LIMIT:
        terms = [1.0 / (j - eps) for j in range(1, m + 1)]
        terms.append(core.digamma(1.0 + eps))
        return math.fsum(terms)
    # R(e) = psi(1+e) - psi(1-e) + psi(m+1-e)
    return core.digamma(1.0 + eps) - core.digamma(1.0 - eps) + core.digamma(m + 1.0 - eps)


def _regular_trigamma(m: int, eps: float) -> float:
    # R'(e) = psi'(1+e) + sum_{j<=m} 1/(j-e)^2
    if m <= _LOOP_LIMIT:
        terms = [1.0 / ((j - eps) * (j - eps)) for j in range(1, m + 1)]
        terms.append(core.trigamma(1.0 + eps))
        return math.fsum(terms)
    return core.trigamma(1.0 + eps) + core.trigamma(1.0 - eps) - core.trigamma(m + 1.0 - eps)


def _gamma_factor(m: int, eps: float) -> float:
    if m <= _LOOP_LIMIT:
        prod = core.gamma(1.0 + eps)
        for j in range(1, m + 1):
            prod /= eps - j
        return prod
    # prod_{j<=m} (e-j) = (-1)^m gamma(m+1-e)/gamma(1-e)
    sign = -1.0 if m % 2 else 1.0
    return (
        sign
        * core.gamma(1.0 + eps)
        * core.gamma(1.0 - eps)
        * core.reciprocal_gamma(m + 1.0 - eps)
    )


def near_pole_context(m: int, eps: float) -> NearPoleContext:
    """Build the factored-evaluation context at z = -m + eps (eps may be 0)."""
    if m < 0:
        raise DomainError(f"pole index must be non-negative, got {m}")
    return NearPoleContext(
        m=m,
        epsilon=eps,
        regular_digamma=_regular_digamma(m, eps),
        sinc_factor=_sinc(TWO_PI, eps),
        gamma_factor=_gamma_factor(m, eps),
    )


@dataclass(frozen=True)
class EntireFamilySpec:
    """Polynomial exponent g(z) = sum a_i z^i for the one-parameter family."""

    g_coefficients: tuple[float, ...] = ()

    def g(self, z: float) -> float:
        acc = 0.0
        for a in reversed(self.g_coefficients):
            acc = acc * z + a
        return acc


# ---------------------------------------------------------------------------
# Q(z) and the Hadamard gamma


def _half_pole_pieces(m: int, eps: float) -> float:
    """D(e) = R_r(e/2) - psi(other half-argument) near z = -m + eps.

    The pole sits in psi(z/2) for even m and in psi((z+1)/2) for odd m; the
    other digamma stays regular at a half-integer <= 1/2.
    """
    r = m // 2
    half = 0.5 * eps
    if r <= _LOOP_LIMIT:
        terms = [1.0 / (j - half) for j in range(1, r + 1)]
        terms.append(core.digamma(1.0 + half))
        rh = math.fsum(terms)
    else:
        rh = core.digamma(1.0 + half) - core.digamma(1.0 - half) + core.digamma(r + 1.0 - half)
    w = (0.5 - r) if m % 2 == 0 else (-r - 0.5)
    return rh - core.digamma(w + half)


def q_factor(z: float) -> float:
    """The Hadamard modification factor Q(z); exactly -1 at non-positive integers."""
    cls = classify(z)
    if cls.is_regular:
        s = sin_pi(z)
        if s == 0.0:  # positive integer: both digammas finite, factor vanishes
            return 0.0
        return s / TWO_PI * (core.digamma(0.5 * z) - core.digamma(0.5 * (z + 1.0)))
    m, eps = cls.m, cls.epsilon
    if eps == 0.0:
        return -1.0
    # Q(-m+e) = -sinc(pi,e) + sin(pi e)/(2 pi) * D(e)
    return -_sinc(PI, eps) + (0.5 * eps * _sinc(PI, eps)) * _half_pole_pieces(m, eps)


def hadamard(z: float) -> float:
    """The Hadamard gamma H(z) = gamma(z)(1 + Q(z)), entire on the reals."""
    cls = classify(z)
    if cls.is_regular:
        return core.gamma(z) * (1.0 + q_factor(z))
    m, eps = cls.m, cls.epsilon
    gf = _gamma_factor(m, eps)
    if gf == 0.0:
        return 0.0  # gamma_factor underflow: |H| < smallest normal
    d = _half_pole_pieces(m, eps)
    return gf * (_sinc_deficit(PI, eps) + 0.5 * _sinc(PI, eps) * d)


# ---------------------------------------------------------------------------
# K(z) and its derivative


def _k_regular(z: float) -> float:
    # direct defining formula; used for Regular z and by the limit oracle
    return core.gamma(z) * (1.0 + sin_pi(2.0 * z) / TWO_PI * core.digamma(z))


def _hadamard_regular(z: float) -> float:
    # direct defining formula without pole extraction; limit-oracle fodder
    q = sin_pi(z) / TWO_PI * (core.digamma(0.5 * z) - core.digamma(0.5 * (z + 1.0)))
    return core.gamma(z) * (1.0 + q)


def k(z: float) -> float:
    """The single-digamma entire factorial K(z); total on finite reals."""
    cls = classify(z)
    if cls.is_regular:
        return _k_regular(z)
    ctx = near_pole_context(cls.m, cls.epsilon)
    if ctx.gamma_factor == 0.0:
        return 0.0
    # K(-m+e) = gamma_factor * [ (1-q(e))/e + q(e) R(e) ]
    deficit = _sinc_deficit(TWO_PI, ctx.epsilon)
    return ctx.gamma_factor * (deficit + ctx.sinc_factor * ctx.regular_digamma)


def k_alt(z: float) -> float:
    """K via gamma + sin(2 pi z)/(2 pi) * gamma'; Regular arguments only.

    Deliberately not stabilized near the poles: it exists to cross-check the
    defining form on the common domain.
    """
    cls = classify(z)
    if not cls.is_regular:
        raise DomainError(f"k_alt is only defined on the regular domain, got z={z!r}")
    return core.gamma(z) + sin_pi(2.0 * z) / TWO_PI * core.gamma_derivative(z)


def k_prime(z: float) -> float:
    """Analytic derivative of K; total on finite reals.

    Regular path:
        K'(z) = gamma(z) [ (1 + cos 2 pi z) psi(z)
                           + sin(2 pi z)/(2 pi) (psi^2(z) + psi'(z)) ].
    Near a pole the factored representation of K is differentiated term by
    term in the offset e, which needs psi'(1+e) and the sinc derivatives.
    """
    cls = classify(z)
    if cls.is_regular:
        psi = core.digamma(z)
        return core.gamma(z) * (
            (1.0 + cos_pi(2.0 * z)) * psi
            + sin_pi(2.0 * z) / TWO_PI * (psi * psi + core.trigamma(z))
        )
    m, eps = cls.m, cls.epsilon
    ctx = near_pole_context(m, eps)
    if ctx.gamma_factor == 0.0:
        return 0.0
    r = ctx.regular_digamma
    rp = _regular_trigamma(m, eps)
    q = ctx.sinc_factor
    u = _sinc_deficit(TWO_PI, eps)
    # d/de log gamma_factor = R(e), so K' = gf * [ R (u + qR) + u' + q'R + qR' ]
    return ctx.gamma_factor * (
        r * (u + q * r) + _sinc_deficit_prime(TWO_PI, eps) + _sinc_prime(TWO_PI, eps) * r + q * rp
    )


# ---------------------------------------------------------------------------
# The pole-free product and the wider family


def entire_product(z: float) -> float:
    """gamma(z) sin(2 pi z), evaluated pole-free as 2 pi cos(pi z)/gamma(1-z)."""
    return TWO_PI * k_recurrence_extra(z)


def k_recurrence_extra(z: float) -> float:
    """The extra recurrence term gamma(z) sin(2 pi z)/(2 pi) = cos(pi z)/gamma(1-z).

    The reflection form on the right is total: 1/gamma supplies the zeros at
    z = 1, 2, 3, ... and there is no pole anywhere on the real line.
    """
    if not math.isfinite(z):
        raise DomainError(f"finite argument required, got {z!r}")
    c = cos_pi(z)
    if c == 0.0:
        return 0.0
    return c * core.reciprocal_gamma(1.0 - z)


def family_member(z: float, spec: EntireFamilySpec) -> float:
    """K(z) + exp(g(z)) * gamma(z) sin(2 pi z) for a polynomial g.

    Every member agrees with gamma at positive integers and half-integers,
    since the added term vanishes exactly there.
    """
    base = k(z)
    prod = entire_product(z)
    if prod == 0.0:
        return base
    try:
        scale = math.exp(spec.g(z))
    except OverflowError:
        warnings.warn(OverflowSignal(f"exp(g({z!r})) overflows binary64"))
        return base + math.copysign(math.inf, prod)
    term = scale * prod
    if math.isinf(term):
        warnings.warn(OverflowSignal(f"family term overflows at z={z!r}"))
    return base + term


def h_recurrence_residual(z: float) -> float:
    """Residual of H(z+1) = z H(z) + 1/gamma(1-z); zero up to roundoff.

    Both z and z+1 must classify as Regular.
    """
    if not classify(z).is_regular or not classify(z + 1.0).is_regular:
        raise DomainError(f"h_recurrence_residual needs Regular z and z+1, got z={z!r}")
    return hadamard(z + 1.0) - z * hadamard(z) - core.reciprocal_gamma(1.0 - z)
