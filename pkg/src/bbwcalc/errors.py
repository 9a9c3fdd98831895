"""Exception hierarchy shared by every engine module."""


class BBWCalcError(Exception):
    """Base class for all engine errors."""


class InvalidInput(BBWCalcError, ValueError):
    """An argument violates a documented precondition."""


class StructuralError(BBWCalcError):
    """A bundle expression is well-typed but structurally unusable (e.g. end0 of a reducible bundle)."""


class InconsistentCharacter(BBWCalcError):
    """A character is not the character of an honest representation."""


class InternalInconsistency(BBWCalcError):
    """Two independent computations that must agree did not."""


class DegenerateInput(BBWCalcError):
    """The requested certificate cannot be formed from the data."""


class NotExpressible(BBWCalcError):
    """A class does not lie in the span of the requested basis."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals or {}
