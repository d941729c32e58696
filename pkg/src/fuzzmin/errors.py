"""Exception types shared across the package."""


class UsageError(Exception):
    """Caller violated a precondition: bad operand, unknown name, malformed input."""


class ParseError(UsageError):
    """Syntax error in an expression or input document.

    `position` is a 0-based character offset into the source text when known.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class FeatureError(UsageError):
    """A constructor was used whose feature is not enabled."""
