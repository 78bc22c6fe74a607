"""Exception types shared across the package."""


class InvalidTripleError(ValueError):
    """A triangle triple contains a non-positive entry."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree.

    This always indicates a bug in this package, never new mathematics:
    every cross-check guarded by this exception is a proven identity.
    """


class SizeLimitExceeded(RuntimeError):
    """Group closure grew past the caller-supplied element limit."""
