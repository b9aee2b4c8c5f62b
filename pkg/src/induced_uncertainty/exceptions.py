"""Exception types raised by the package.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch that.
"""


class UncertaintyError(ValueError):
    """Base class for all validation and domain errors."""


class EmptyError(UncertaintyError):
    pass


class NegativeEntryError(UncertaintyError):
    pass


class NotNormalizedError(UncertaintyError):
    pass


class IndexOutOfRangeError(UncertaintyError):
    pass


class DimensionMismatchError(UncertaintyError):
    pass


class NegativeOrderError(UncertaintyError):
    pass


class GeneratorNotNormalizedError(UncertaintyError):
    """Convex generator with f(1) != 0."""


class InfiniteReferenceError(UncertaintyError):
    """The constant reference divergence of an induced measure is infinite."""


class UnsupportedOrderError(UncertaintyError):
    pass


class NotHermitianError(UncertaintyError):
    pass


class NotUnitTraceError(UncertaintyError):
    pass


class NotPSDError(UncertaintyError):
    pass


class NoConvergenceError(UncertaintyError):
    pass


class OrthogonalStatesError(UncertaintyError):
    pass
