"""Exception types shared across the package."""


class RegdivError(Exception):
    """Base class for all regdiv errors."""


class ResourceLimitError(RegdivError):
    """A requested computation exceeds a configured size cap."""


class DivisorBudgetError(ResourceLimitError):
    """Trial division would exceed the configured iteration budget."""


class InvalidPairError(RegdivError, ValueError):
    """A (d, m) pair violates d >= 1, m >= 0, or d | m^2 + 1."""


class RootHasNoParentError(RegdivError, ValueError):
    """The root pair (1, 0) has no parent."""


class ConsistencyError(RegdivError):
    """A mathematically guaranteed invariant failed at runtime.

    Raised when two routes to the same quantity disagree (direct row sum
    vs. its recurrence, enumerated row maximum vs. the zigzag path, a pair
    with zero or two valid parents).  Always an implementation bug, never
    bad input.
    """
