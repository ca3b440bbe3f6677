"""Exception types shared across the package."""


class ShieldError(Exception):
    """Base class for all package-specific errors."""


class OutOfRange(ShieldError, ValueError):
    """Shield angle outside the open admissible interval."""


class AmbiguousDecimal(ShieldError, ValueError):
    """Decimal angle too close to an exact special value."""


class NoNumericValue(ShieldError, TypeError):
    """Numeric evaluation requested for a generic (symbolic) angle."""


class OverlapError(ShieldError):
    """Two tile interiors intersect."""


class EdgeMismatchError(ShieldError):
    """A shared edge is not endpoint-to-endpoint."""


class AtlasViolation(ShieldError):
    """An interior vertex star is not a legal vertex configuration."""


class NotValidated(ShieldError):
    """Operation requires a validated patch."""


class IncompleteCoverage(ShieldError):
    """The requested disk is not fully covered by tiles."""


class MissingChoice(ShieldError, KeyError):
    """A dodecagon cell in the window has no filling assigned."""


class BudgetExceeded(ShieldError):
    """Search budget exhausted; carries partial results."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
