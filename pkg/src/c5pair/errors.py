"""Exception hierarchy shared by every module."""


class InvalidArgumentError(ValueError):
    """Input violates a stated precondition of the called function."""


class SizeLimitError(InvalidArgumentError):
    """Input exceeds the documented size cap of an exponential routine."""


class PreconditionError(InvalidArgumentError):
    """A structural precondition failed; ``payload`` carries the evidence."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class NotChordalError(InvalidArgumentError):
    """Raised by chordal-only routines; ``hole`` is an induced cycle of length >= 4."""

    def __init__(self, hole):
        super().__init__(f"graph is not chordal, hole {tuple(hole)}")
        self.hole = tuple(hole)


class InternalInvariantError(RuntimeError):
    """A guarantee that the underlying combinatorics promises did not hold.

    This signals a bug (or an input that lied about a verified property),
    never a legitimate outcome.
    """
