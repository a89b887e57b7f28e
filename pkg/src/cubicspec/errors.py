"""Exception types shared across the package."""


class CubicspecError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(CubicspecError):
    """Malformed graph6 (or edge-list) input.

    `offset` is the byte position of the offending character, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceededError(CubicspecError):
    """An exact procedure was asked to run beyond its guaranteed-budget size.

    Raised instead of ever returning a possibly-wrong answer.
    """


class StructureError(CubicspecError):
    """A structural precondition failed; carries the offending structure."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class CertificationError(CubicspecError):
    """A certificate failed to validate where theory says it cannot.

    This is a tripwire: it indicates either an internal bug or a genuine
    counterexample to one of the verified claims, and must never be
    silenced.
    """
