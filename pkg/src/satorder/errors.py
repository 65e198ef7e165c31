"""Exception types shared across the package.

Everything raised on purpose derives from SatOrderError so callers (and the
HTTP layer) can catch one base class and map it to a diagnostic.
"""


class SatOrderError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetected(SatOrderError):
    """Transitive closure of the given strict pairs violates antisymmetry."""


class ParseError(SatOrderError):
    """A poset file could not be read or does not match the documented grammar."""


class TooLarge(SatOrderError):
    """Input exceeds the guard of an exhaustive enumerator."""


class NotASetRepresentation(SatOrderError):
    """The candidate map is not an order-embedding into sets."""


class NotParsimonious(SatOrderError):
    """The set representation does not add exactly one new point per element."""


class NewPointsNotInjective(SatOrderError):
    """Two elements share a new point, so no induced order isomorphism exists."""


class NoMaximum(SatOrderError):
    """The member set has no greatest element, so it is not a bouquet."""


class TooSmall(SatOrderError):
    """A bouquet needs at least two members."""


class NotParallel(SatOrderError):
    """Skew topping is only defined for parallel bouquets."""


class NotIntervalOrder(SatOrderError):
    """The poset contains a two-plus-two suborder, so it has no interval representation."""


class PreconditionViolated(SatOrderError):
    """A witness construction was called outside its stated precondition."""
