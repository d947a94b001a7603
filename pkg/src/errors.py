"""
Exception hierarchy for bsroots.
The CLI maps each class to an exit code (see cli.EXIT_CODES).
"""

from typing import Optional


class BSRootsError(Exception):
    """Base class for all errors raised by bsroots."""


class DimensionError(BSRootsError, ValueError):
    """Exponent vectors or ideals live in different ambient dimensions."""


class PreconditionError(BSRootsError, ValueError):
    """An operation was called outside its domain."""


class ParseError(PreconditionError):
    """Malformed ideal text."""

    def __init__(self, message: str, position: int = 0):
        """
        Initialize the parse error.

        Args:
            message: What went wrong
            position: 0-based offset into the input text
        """
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ResourceBudgetError(BSRootsError, RuntimeError):
    """A computation would exceed its configured budget."""

    def __init__(self, message: str, bound: int, level: Optional[int] = None):
        """
        Initialize the budget error.

        Args:
            message: What exceeded the budget
            bound: The configured limit that was hit
            level: Level e reached before the failure, when applicable
        """
        detail = f"{message} (bound {bound}"
        if level is not None:
            detail += f", level reached {level}"
        super().__init__(detail + ")")
        self.bound = bound
        self.level = level


class ConsistencyError(BSRootsError, AssertionError):
    """Two independent computations of the same quantity disagree."""
