"""Exception hierarchy shared by all modules."""


class YBEError(ValueError):
    """Base class for every error raised by this package."""


class DimensionError(YBEError):
    pass


class SingularMatrixError(YBEError):
    """Raised when LU elimination meets a pivot below the singularity threshold."""

    def __init__(self, message, smallest_pivot):
        super().__init__(message)
        self.smallest_pivot = smallest_pivot


class NotInvolutionError(YBEError):
    pass


class NotQuadraticError(YBEError):
    pass


class NotASolutionError(YBEError):
    pass


class InadmissibleCaseError(YBEError):
    pass


class ConsistencyError(YBEError):
    """An internal structural assertion failed (a case-analysis invariant was violated)."""
