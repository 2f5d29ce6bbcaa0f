from __future__ import annotations


class EquisingError(Exception):
    """Base class for every error raised by the package."""


class SemigroupError(EquisingError, ValueError):
    pass


class PolyError(EquisingError, ValueError):
    pass


class PolyParseError(PolyError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ReducibleError(EquisingError):
    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class InternalConsistencyError(EquisingError, AssertionError):
    """Two independent computations of the same invariant disagree."""


class UsageError(EquisingError):
    """Malformed command line or input source."""
