"""Exception types raised across the package."""


class DomainError(ValueError):
    """Input violates a documented precondition."""


class PreconditionError(DomainError):
    pass


class SizeLimitError(DomainError):
    pass


class GraphParseError(DomainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
