"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation window exceeds a configured cap."""


class ParseError(ValueError):
    """Malformed element expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SemanticError(ValueError):
    """Well-formed expression naming an invalid generator."""
