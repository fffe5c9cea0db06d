"""
Error types shared by every PlaneDraw module.
"""


class PlaneDrawError(Exception):
    """Base class for all PlaneDraw errors."""


class ParseError(PlaneDrawError, ValueError):
    """Malformed input file or command-line argument."""

    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(PlaneDrawError, ValueError):
    """An operation was called with inputs outside its contract."""


class LimitExceededError(PreconditionError):
    """Instance too large for an exponential-time routine."""


class InvariantError(PlaneDrawError, RuntimeError):
    """Internal consistency failure (corrupt drawing or a bug)."""
