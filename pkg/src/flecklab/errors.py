"""Exception types shared across the package."""


class FlecklabError(Exception):
    """Common base so callers can catch everything this package raises."""


class InvalidParameterError(FlecklabError, ValueError):
    """A caller-supplied argument lies outside the operation's domain."""


class UnsupportedRegimeError(InvalidParameterError):
    """The requested parameter regime is deliberately left undefined."""


class InternalInvariantError(FlecklabError, RuntimeError):
    """An internally guaranteed property failed.

    Raised only when a mathematically certain fact does not hold in an
    actual computation, so it always signals an implementation bug rather
    than bad input.
    """


class EmptyGridError(InvalidParameterError):
    """A sweep grid produced zero checkable (non-skipped) instances."""


class UnknownStatementError(InvalidParameterError):
    """The requested statement id is not registered."""
