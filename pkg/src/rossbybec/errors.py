"""Exception types shared across the package."""


class RossbyBecError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(RossbyBecError, ValueError):
    """A physical or numerical parameter violates its documented constraints."""


class NoEquilibriumError(RossbyBecError):
    """No Thomas-Fermi equilibrium exists for the requested parameters."""


class EmptyCloudError(NoEquilibriumError):
    """The Thomas-Fermi support is empty (outer radius squared <= 0)."""


class WrongTopologyError(RossbyBecError):
    """A disk-mode solve requested on an annulus equilibrium, or vice versa."""


class SingularGradientError(RossbyBecError):
    """Logarithmic density gradient evaluated outside or on the support boundary."""


class UndefinedGradientError(RossbyBecError):
    """Group velocity requested at k = 0."""


class ResolutionError(RossbyBecError):
    """Grid too coarse for the requested finite-difference operation."""


class StepSizeError(RossbyBecError):
    """Time step violates the linear stability guard."""


class DivergenceError(RossbyBecError):
    """Integration produced non-finite amplitudes."""

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"non-finite amplitudes at step {step}")


class CorruptedStateError(RossbyBecError):
    """Spectral state contains NaN or Inf before integration."""


class NumericalFailureError(RossbyBecError):
    """A root search or similar numerical procedure failed; carries diagnostics."""

    def __init__(self, message, diagnostic=None):
        self.diagnostic = diagnostic
        super().__init__(message)
