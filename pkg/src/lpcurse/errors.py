"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(RuntimeError):
    """A requested computation would exceed its configured size cap."""


class ConvergenceError(RuntimeError):
    """An iterative routine failed to reach its tolerance."""


class ParseError(DomainError):
    """A point/rule file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
