"""Exception types shared across the package."""


class PentasigmaError(Exception):
    """Base class for errors raised by pentasigma."""


class InconsistencyError(PentasigmaError, ArithmeticError):
    """A recurrence produced a value that no valid input can produce.

    Raised by the pentagonal recurrence when the supplied sigma sequence
    is corrupt (sigma(0) != 1, or a negative count appears).
    """


class ResourceLimitError(PentasigmaError, MemoryError):
    """A request exceeds a configured size cap."""
