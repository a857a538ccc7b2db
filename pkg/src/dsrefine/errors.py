class DsRefineError(Exception):
    """Base class for library errors."""


class InputError(DsRefineError, ValueError):
    """Malformed or inconsistent user input."""


class PreconditionError(InputError):
    """An operation was called outside its domain."""


class InternalError(DsRefineError, AssertionError):
    """A guaranteed identity failed; this is a bug, not bad input."""
