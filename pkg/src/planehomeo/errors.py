class PlaneHomeoError(Exception):
    """Base class for errors raised by this package."""


class DomainError(PlaneHomeoError, ValueError):
    """A parameter lies outside the domain where a map is a homeomorphism."""


class OverflowGuardError(PlaneHomeoError, ArithmeticError):
    """A disk-conjugated evaluation reached the unit circle."""


class MalformedTreeError(PlaneHomeoError, TypeError):
    """An expression tree contains a node of the wrong kind."""


class NoBoundError(PlaneHomeoError):
    """No Lipschitz bound is available for a node on the requested region."""


class InconclusiveError(PlaneHomeoError):
    """A certificate computation could not decide."""

    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class ConvergenceError(PlaneHomeoError):
    """A halving search hit its iteration cap."""
