"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` for malformed input
(CLI exit code 1) and :class:`NumericalError` for degenerate numerics (exit 2).
"""


class DematelTodimError(Exception):
    """Base class. ``stage`` is filled in by the pipeline when known."""

    stage: str | None = None


class ValidationError(DematelTodimError, ValueError):
    pass


class NumericalError(DematelTodimError, ArithmeticError):
    pass


# fuzzy core
class UnknownLabel(ValidationError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


# cfcs
class EmptyCell(ValidationError):
    pass


class RaggedExperts(ValidationError):
    pass


class MissingCell(ValidationError):
    pass


# io
class ParseError(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class NonSquare(ValidationError):
    pass


class SinkError(DematelTodimError, OSError):
    pass


class FixtureMissing(DematelTodimError, FileNotFoundError):
    pass


# ranking comparison
class LengthMismatch(ValidationError):
    pass


class NotAPermutation(ValidationError):
    pass


# todim
class ZeroReferenceWeight(ValidationError):
    pass


class ZeroColumn(ValidationError):
    pass


# dematel
class ZeroMatrix(NumericalError):
    pass


class SingularSystem(NumericalError):
    def __init__(self, message: str, pivot: float | None = None):
        super().__init__(message)
        self.pivot = pivot


class DegenerateInfluence(NumericalError):
    pass
