"""Exception types raised by the package."""


class LatcutError(Exception):
    """Base class for all latcut-specific errors."""


class DuplicateLabel(LatcutError):
    """An element label was declared more than once."""


class UnknownLabel(LatcutError):
    """A label was referenced that no element carries."""


class CycleDetected(LatcutError):
    """The supplied cover relation is not acyclic, so no poset exists."""


class CapacityExceeded(LatcutError):
    """An enumeration would exceed the configured size cap."""


class InvalidInterval(LatcutError):
    """The given (bottom, top) pair is not an interval of the lattice."""


class NotACutting(LatcutError):
    """The interval is not met by every maximal chain, so it cannot be
    expanded without losing distributivity."""


class OddSize(LatcutError):
    """An even size was required (crowns and Lucas cubes)."""


class ParseError(LatcutError):
    """Malformed poset file.  Carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
