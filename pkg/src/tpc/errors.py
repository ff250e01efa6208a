"""Exception hierarchy shared across the package."""


class TpcError(Exception):
    """Base class for all package errors."""


class ValidationError(TpcError):
    """Malformed or inconsistent user input (diagram, coloring, CLI args)."""


class ConsistencyError(TpcError):
    """An internal cross-check failed; the result would not be trustworthy."""


class BoundExceededError(TpcError):
    """A search or enumeration hit its configured resource bound."""


class ConsistencyWarning(UserWarning):
    """A soft cross-check failed; the result is reported but flagged."""
