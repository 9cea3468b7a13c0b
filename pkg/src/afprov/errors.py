"""Exception hierarchy shared by all afprov modules."""

from __future__ import annotations


class AfError(Exception):
    """Base class for all afprov errors."""


class InvalidToken(AfError):
    """Argument name is empty or contains a forbidden character."""


class UnknownArgument(AfError):
    """An argument name does not exist in the framework."""


class MemberNotInAF(AfError):
    """An extension-set member is not an argument of the framework."""


class TooLargeForOracle(AfError):
    """The framework exceeds the brute-force oracle size guard."""


class InvariantViolation(AfError):
    """An internal consistency check failed; indicates a solver bug."""


class ParseError(AfError):
    """Input text could not be parsed; carries 1-based line/column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})" if line else message)
        self.line = line
        self.column = column


class NoCriticalSetFound(AfError):
    """No subset of the candidate edges validates as a critical attack set."""


class BudgetExceeded(AfError):
    """The candidate-edge count exceeds the configured search budget."""


class InvalidDelta(AfError):
    """The supplied edge set is not a valid critical attack set."""


class LayoutMismatch(AfError):
    """A layout was built from a different subject than the one exported."""
