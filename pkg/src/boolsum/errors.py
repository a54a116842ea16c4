"""Exception hierarchy shared across the package."""


class BoolsumError(Exception):
    """Base class for all library errors."""


class ResourceLimitError(BoolsumError):
    """An operation would enumerate past a configured resource guard."""


class PrecisionError(BoolsumError):
    """The requested working precision is too small for the computation."""


class DegenerateDegreeSetError(BoolsumError):
    """The degree set {1} has no root-of-unity structure to work with."""
