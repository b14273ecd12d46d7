"""Exception types shared across the package."""


class DelayGameError(Exception):
    """Base class for all package errors."""


class InputError(DelayGameError):
    """A caller passed inconsistent or out-of-domain data."""


class FormatError(DelayGameError):
    """A text file or bundle file is malformed.

    `line` is the 1-based line number when known, else None.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class BudgetError(DelayGameError):
    """A construction would exceed the configured resource budget."""


class DegenerateGameError(DelayGameError):
    """The reduced game has no infinite class to offer Player I.

    By convention Player O wins vacuously; callers report the flag.
    """
