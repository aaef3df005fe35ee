"""Exception types shared across the package."""


class SspahpError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SspahpError):
    """Malformed files, misaligned identifiers, or out-of-contract arguments."""


class NumericalError(SspahpError):
    """A computation could not produce a meaningful result."""


class DegenerateWeightsError(NumericalError):
    """No criterion carries usable information; weights are undefined."""


class ConvergenceError(NumericalError):
    """Iterative solve hit its iteration cap; carries the last iterate."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class InconsistentJudgmentsError(SspahpError):
    """Pairwise judgments failed the consistency gate in strict mode."""
