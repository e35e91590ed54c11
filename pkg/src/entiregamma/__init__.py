"""Entire factorial functions and the special-function core behind them.

The library evaluates the Euler gamma family (gamma, log-gamma, digamma,
trigamma) from scratch in double precision, and on top of it two entire
extensions of the factorial: the Hadamard gamma H(z) and the
single-digamma function K(z), which agrees with gamma at the positive
integers, at every half-integer, and at every extremum of either
function.  All of them are finite on the whole real line; evaluation near
the former poles goes through an exactly factored, cancellation-free
path.

The ``oracle`` submodule (imported separately; it pulls in numba) holds
slower independent reference implementations for differential testing.
"""

from .analysis import (
    FIRST_POSITIVE_ZERO,
    Bracket,
    ExtremumMatch,
    RootResult,
    ScanReport,
    digamma_zeros_in,
    extremum_match_report,
    find_root,
    normalized_k,
    scan_zeros,
)
from .core import (
    CONSTANTS,
    DEFAULT_PARAMS,
    EULER_GAMMA,
    PI,
    SWITCH_RADIUS,
    TWO_PI,
    ApproximationParams,
    Constants,
    PoleClassification,
    PoleKind,
    classify,
    cos_pi,
    digamma,
    gamma,
    gamma_derivative,
    log_gamma,
    reciprocal_gamma,
    sin_pi,
    trigamma,
)
from .entire import (
    EntireFamilySpec,
    NearPoleContext,
    entire_product,
    family_member,
    h_recurrence_residual,
    hadamard,
    k,
    k_alt,
    k_prime,
    k_recurrence_extra,
    near_pole_context,
    q_factor,
)
from .errors import ConvergenceError, DomainError, OverflowSignal, PoleError

__version__ = "0.1.0"

__all__ = [
    "ApproximationParams",
    "Bracket",
    "CONSTANTS",
    "Constants",
    "ConvergenceError",
    "DEFAULT_PARAMS",
    "DomainError",
    "EULER_GAMMA",
    "EntireFamilySpec",
    "ExtremumMatch",
    "FIRST_POSITIVE_ZERO",
    "NearPoleContext",
    "OverflowSignal",
    "PI",
    "PoleClassification",
    "PoleError",
    "PoleKind",
    "RootResult",
    "SWITCH_RADIUS",
    "ScanReport",
    "TWO_PI",
    "classify",
    "cos_pi",
    "digamma",
    "digamma_zeros_in",
    "entire_product",
    "extremum_match_report",
    "family_member",
    "find_root",
    "gamma",
    "gamma_derivative",
    "h_recurrence_residual",
    "hadamard",
    "k",
    "k_alt",
    "k_prime",
    "k_recurrence_extra",
    "log_gamma",
    "near_pole_context",
    "normalized_k",
    "q_factor",
    "reciprocal_gamma",
    "scan_zeros",
    "sin_pi",
    "trigamma",
]
