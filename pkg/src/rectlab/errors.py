"""Shared exception types."""


class RectlabError(Exception):
    """Base class for all rectlab errors."""


class SizeGuardError(RectlabError):
    """An exact solver refused an instance that exceeds its size guard.

    Carries a human-readable message naming the guard and the suggested
    fallback (heuristic / greedy / constructive path).
    """


class BmatFormatError(RectlabError, ValueError):
    """Malformed bmat file.  ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class BmatDimensionError(BmatFormatError):
    """Dimension header is malformed or row/column counts do not match."""


class BmatCharacterError(BmatFormatError):
    """A matrix row contains a character other than 0 or 1."""


class BmatTruncatedError(BmatFormatError):
    """File or row ends before the declared number of bits/rows."""
