"""Exception types shared across the package."""


class OpenPartError(ValueError):
    """Base class for all errors raised by this package."""


class RangeError(OpenPartError):
    """A vertex id or size parameter is outside its allowed range."""


class CycleError(OpenPartError):
    """The given cover edges contain a directed cycle."""


class InvalidPartition(OpenPartError):
    """Blocks overlap, are empty, or do not cover the vertex set."""


class LimitExceeded(OpenPartError):
    """A brute-force enumeration was requested above the configured cap."""


class InvalidTriple(OpenPartError):
    """Block sizes do not sum to the chain lengths, or the join level is out of range."""


class NotOpen(OpenPartError):
    """The partition is not open, so it has no triple encoding."""


class NotDecodable(OpenPartError):
    """An open partition failed to round-trip through the triple encoding.

    This cannot happen for V-posets; seeing it means an internal invariant broke.
    """


class AsymmetricSequence(OpenPartError):
    """A sequence pair is not symmetric (seq[i] != seq[n-1-i]) or is malformed."""


class NonPositiveEntry(OpenPartError):
    """A sequence entry is zero or negative where positivity is required."""
