"""Typed errors shared across the package."""


class DomainError(ValueError):
    """Argument outside a function's domain (non-finite, wrong sign, bad range)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of a non-entire function.

    Kept distinct from plain domain errors so callers that remove the
    singularity (the entire extensions) can intercept it instead of
    propagating NaN or infinity.
    """

    def __init__(self, z, name="gamma"):
        self.z = z
        super().__init__(f"{name} pole at z={z!r}")


class ConvergenceError(ArithmeticError):
    """A numerical procedure failed to converge to its stated tolerance."""


class OverflowSignal(RuntimeWarning):
    """Issued when a result exceeds the representable range.

    The evaluation returns a signed infinity; this warning is the flag
    that distinguishes genuine overflow from a pole.
    """
