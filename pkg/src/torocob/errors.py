"""Exception hierarchy.

Every error raised for mathematically unusable input derives from
:class:`TorocobError`. Errors that come with a validity report keep it on the
``report`` attribute so callers (and the CLI) can serialize it.
"""


class TorocobError(ValueError):
    """Base class for invalid mathematical input."""

    def __init__(self, message="", report=None):
        super().__init__(message)
        self.report = report


# lattice
class ContainmentError(TorocobError):
    pass


class RankError(TorocobError):
    pass


class ZeroVectorError(TorocobError):
    pass


class NotUnimodularError(TorocobError):
    pass


# corners
class InvalidComplexError(TorocobError):
    pass


class CycleLengthError(TorocobError):
    pass


class AdjacencyError(TorocobError):
    pass


class NotBottomError(TorocobError):
    pass


class NotSimpleError(TorocobError):
    pass


class AmbiguousIncidenceError(TorocobError):
    pass


# charfun
class DimensionMismatch(TorocobError):
    pass


class UnknownFace(TorocobError, KeyError):
    pass


class InvalidCharFunction(TorocobError):
    pass


# families
class NotASimplex(TorocobError):
    pass


class DependentVectors(TorocobError):
    pass


class NotPrimitive(TorocobError):
    pass


class FanConditionError(TorocobError):
    pass


class ClosedBaseError(TorocobError):
    pass


class BundleFlagError(TorocobError):
    pass


# cobordism
class UnknownMarkedFacet(TorocobError, KeyError):
    pass


class HasFixedPoints(TorocobError):
    pass


class InternalInvariantError(AssertionError):
    """A construction produced output that fails its own postcondition."""
