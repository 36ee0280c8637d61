"""Error taxonomy shared across the package.

The CLI maps these onto process exit codes: domain and usage problems exit
with 2, structural model rejection with 3, numerical failures with 4.
"""


class EdgewiseError(Exception):
    """Base class for all package errors."""

    exit_code = 4


class DomainError(EdgewiseError, ValueError):
    """Argument outside the documented domain of an operation."""

    exit_code = 2


class RangeError(EdgewiseError, ValueError):
    """Result would overflow or underflow double precision."""

    exit_code = 2


class ModelRejectionError(EdgewiseError):
    """Input model fails a structural hypothesis rather than a numeric one.

    Carries the measured defect so callers can report how badly the
    hypothesis failed.
    """

    exit_code = 3

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class NumericalError(EdgewiseError):
    """A numerical procedure failed to reach its accuracy target."""

    exit_code = 4


class PoleError(NumericalError):
    """ODE integration approached a pole; carries the estimated abscissa."""

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class ConditioningError(NumericalError):
    """A factorization lost positivity or acceptable conditioning."""
