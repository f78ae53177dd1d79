"""Shared exception types."""


class SubpackError(Exception):
    """Base class for all package errors."""


class ParameterError(SubpackError, ValueError):
    """Invalid or out-of-domain parameters."""


class NotApplicableError(SubpackError, ValueError):
    """A bound or construction does not apply to these parameters."""


class SizeCapError(SubpackError, RuntimeError):
    """A requested object exceeds the configured size cap."""

    def __init__(self, message: str, **counts: int):
        super().__init__(message)
        self.counts = counts


class CodeFileError(SubpackError, ValueError):
    """Malformed code file."""
