"""Exceptions raised by `scramble_attack`.

Everything derives from ``ScrambleAttackError`` so callers can catch the whole family.
Input problems additionally derive from ``ValueError``.
"""


class ScrambleAttackError(Exception):
    """Base class for every error raised by this package."""


class InvalidParametersError(ScrambleAttackError, ValueError):
    """A ``ScrambleParams`` or ``AttackConfig`` value breaks one of its invariants."""


class MalformedInputError(ScrambleAttackError, ValueError):
    """An input violates its contract, e.g. a response of the wrong length or bad hex."""


class TraceParseError(MalformedInputError):
    """A trace file line could not be parsed."""

    def __init__(self, message: str, line_number: int) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CaptureParseError(MalformedInputError):
    """A handshake capture could not be decoded."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class EmptyPolygonError(ScrambleAttackError, ValueError):
    """An operation that needs at least one point was given an empty polygon."""


class EnumerationBudgetExceededError(ScrambleAttackError):
    """Materialising lattice points would exceed the caller's budget.

    The fix is usually more Procedure-2 rounds or a finer last cell exponent.
    """

    def __init__(self, budget: int, required: int, message: str | None = None) -> None:
        message = message or (
            f"enumeration needs {required} lattice points but the budget is {budget}; "
            "add filtering rounds or use a finer cell exponent"
        )
        super().__init__(message)
        self.budget = budget
        self.required = required


class NoPolygonError(ScrambleAttackError):
    """No candidate extra digit yields a nonempty polygon set for a pair."""


class AttackInputError(ScrambleAttackError, ValueError):
    """The observed pairs cannot drive an attack (too few, or repeated challenges)."""
