"""
Error hierarchy for tfsqueeze.

Every error carries the exit code the command line maps it to: 2 for
usage/validation problems, 1 for data and I/O problems. Validation errors
also derive from ValueError.
"""

from tfsqueeze.core.utils.constants import ExitCodes


class TfSqueezeError(Exception):
    """Base class for all tfsqueeze errors."""

    exit_code = ExitCodes.USAGE_ERROR


class ValidationError(TfSqueezeError, ValueError):
    """Invalid parameters or inputs to an operation."""


class RangeError(ValidationError):
    """A parameter lies outside its declared range."""


class DimensionError(ValidationError):
    """Shapes, grids or lengths do not match."""


class ArgumentError(ValidationError):
    """An argument combination is not allowed (e.g. exponential iteration with N=10)."""


class UnsupportedOperationError(ValidationError):
    """The operation is not defined for the given input kind."""


class EmptySelectionError(ValidationError):
    """A band or mask selects nothing."""


class OracleGuardError(ValidationError):
    """The brute-force oracle was asked for a problem too large for it."""


class UndefinedMetricError(ValidationError):
    """A metric has no defined value for the input (e.g. all-zero matrix)."""


class DataFormatError(TfSqueezeError):
    """A file is malformed or truncated."""

    exit_code = ExitCodes.DATA_ERROR

    def __init__(self, message: str, field: str = ""):
        super().__init__(message)
        self.field = field
