"""Exception hierarchy shared by every module of the package."""


class RingInvError(Exception):
    """Base class for all package errors."""


class RingSpecError(RingInvError, ValueError):
    """Malformed ring specification or element literal."""


class NotEnumerableError(RingInvError):
    """An exhaustive operation was requested on a ring that cannot be enumerated."""


class PreconditionError(RingInvError, ValueError):
    """An operation's documented precondition does not hold."""


class NotRegularError(PreconditionError):
    """The element has no inner inverse."""


class NoInvolutionError(PreconditionError):
    """The ring carries no involution."""


class UnknownTheoremError(RingInvError, KeyError):
    """Catalog lookup failed."""


class ConsistencyError(RingInvError, AssertionError):
    """Two routes that must agree did not (uniqueness, route agreement, theorem equivalence)."""
