"""Exception types shared across the package."""


class TutteError(Exception):
    """Base class for all package errors."""


class PreconditionError(TutteError, ValueError):
    """Input graph violates a hypothesis required by an operation."""


class CapExceededError(TutteError):
    """An exponential oracle was asked to run past its configured size cap."""


class GraphParseError(TutteError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
