"""Exception types raised by the lkc library."""


class LkcError(Exception):
    """Base class for all library errors."""


class GaplessError(LkcError):
    """The spectrum is gapless (a phase boundary); the winding number is undefined."""


class NonConvergence(LkcError):
    """An iterative refinement exhausted its budget without stabilizing."""


class DegenerateState(LkcError):
    """A mode vector collapsed below representable norm (should be unreachable)."""


class NonHermitianInput(LkcError):
    """A matrix expected to be Hermitian failed the symmetry check."""


class InsufficientSamples(LkcError):
    """Too few data points for the requested fit."""


class DegenerateAbscissa(LkcError):
    """All fit abscissa values coincide; the gradient is undefined."""


class ConfigError(LkcError):
    """A run configuration failed validation."""


class IoError(LkcError):
    """An output location could not be created or written."""
