"""
Exception hierarchy for the numeration library
"""

from typing import Optional


class NumerationError(Exception):
    """Base class for every error raised by chung_graham"""


class UnsupportedInterval(NumerationError, ValueError):
    """The interval d is not a positive even integer"""

    def __init__(self, d: object):
        self.d = d
        super().__init__(f"interval must be even and positive, got d={d!r}")


class DigitParseError(NumerationError, ValueError):
    """Digit text could not be parsed into a coefficient sequence"""


class ConfigurationError(NumerationError, ValueError):
    """An environment override has an unusable value"""


class InvalidInput(NumerationError, ValueError):
    """A digit string breaks the rule of expansion where a valid one is required"""

    def __init__(self, violation, message: Optional[str] = None):
        self.violation = violation
        super().__init__(message or f"digit string breaks the rule: {violation}")


class NotDecomposable(NumerationError):
    """A digit string has no decomposition into blocks"""

    def __init__(self, position: int, message: Optional[str] = None):
        self.position = position
        super().__init__(message or f"not decomposable: no block ends at or covers index {position}")


class DeskScaleExceeded(NumerationError):
    """The oracle was asked to enumerate more values than the desk limit allows"""

    def __init__(self, requested: int, limit: int):
        self.requested = requested
        self.limit = limit
        super().__init__(f"enumeration of {requested} values exceeds the desk limit of {limit}")
