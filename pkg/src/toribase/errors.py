"""Exception hierarchy shared by all toribase modules.

Exit-code mapping used by the CLI: usage/parse problems exit 1, resource
limits exit 2, and InconsistencyError exits 3 (a failed mathematical
cross-check, which always indicates a bug, never a finding).
"""


class ToribaseError(Exception):
    """Base class for all toribase errors."""


class DimensionError(ToribaseError):
    """Vector or matrix dimensions do not match."""


class InstanceError(ToribaseError):
    """Invalid instance data (zero column, duplicate generators, ...)."""


class ResourceLimitError(ToribaseError):
    """A configured cap (fiber size, reduction steps, cycles) was exceeded."""


class InconsistencyError(ToribaseError):
    """Two independent computation routes disagreed; implementation bug."""


class ParseError(ToribaseError):
    """Instance file syntax error, with 1-based location information."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
