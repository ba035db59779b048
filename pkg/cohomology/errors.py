from typing import Optional


class ThetaCalcError(Exception):
    """Base class for every error raised by the engine."""


class ConfigurationError(ThetaCalcError):
    """Raised when an environment setting cannot be parsed."""


class InputError(ThetaCalcError, ValueError):
    """Malformed caller input; `field` points at the offending value."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field
        self.reason = message

    def __str__(self):
        if self.field:
            return f"{self.field}: {self.reason}"
        return self.reason


class ContextMismatchError(ThetaCalcError):
    """Two classes from abelian varieties of different dimension were combined."""


class InvariantViolationError(ThetaCalcError):
    """A value broke a type invariant, or two characterizations disagreed."""


class RankError(ThetaCalcError, ValueError):
    pass


class UndeclaredWitError(ThetaCalcError):
    """The transform needs the WIT index j and none was declared."""


class WitConsistencyError(ThetaCalcError):
    """A declared WIT index contradicts the arithmetic of the invariants."""


class DegreeError(ThetaCalcError):
    """A class is not homogeneous of the required degree."""


class SequenceShapeError(ThetaCalcError):
    """Members of an exact sequence disagree on context, side or WIT index."""
