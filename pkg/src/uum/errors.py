"""Exception hierarchy shared by every module of the package."""


class UumError(Exception):
    """Base class for all errors raised by :mod:`uum`."""


class NameCollision(UumError):
    pass


class UnknownName(UumError):
    pass


class InvalidName(UumError):
    """Empty name, or a name containing a line break."""


class InvalidSet(UumError):
    pass


class ContextMismatch(UumError):
    pass


class ParseError(UumError):
    """Malformed input file; ``line`` is 1-based (``None`` when not applicable)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(UumError):
    """Enumeration stopped because more than ``cap`` items would be produced."""

    def __init__(self, cap, partial_count):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(f"cap of {cap} exceeded after {partial_count} items")


class MissingEmbedding(UumError):
    pass


class RemovalsRejected(UumError):
    pass


class TooLargeForOracle(UumError):
    pass
