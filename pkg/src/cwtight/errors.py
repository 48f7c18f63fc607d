"""Exception types raised across the package."""


class CwTightError(Exception):
    """Base class for all package errors."""


class InputError(CwTightError, ValueError):
    """Malformed input: bad dimensions, unparsable documents, out-of-range values."""


class NonCyclicQuotient(CwTightError, ValueError):
    """The cokernel of a relation matrix is not a cyclic group."""


class NonCyclicTopCohomology(NonCyclicQuotient):
    """Top cohomology is neither infinite cyclic, of order 2, nor trivial."""


class ChainMapError(CwTightError, ValueError):
    """Cell and skeleton degrees do not assemble into a cochain map."""


class UnsupportedTarget(CwTightError, ValueError):
    """Operation not defined for the requested target model."""


class EmbeddingViolation(CwTightError, ValueError):
    """Tree segments (or rotated tree copies) intersect where they must not."""
