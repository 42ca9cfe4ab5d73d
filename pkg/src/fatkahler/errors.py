"""Exceptions shared by the library and the command line."""


class PreconditionError(ValueError):
    """An input violates the hypothesis a computation depends on."""


class MalformedSchemeError(ValueError):
    """A scheme or generator document cannot be interpreted."""


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class SearchCapError(RuntimeError):
    """A generator search reached its window cap without stabilizing."""
