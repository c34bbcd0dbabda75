"""Exception types shared across the package."""


class InvalidGraphError(ValueError):
    """Raised when an edge list violates a graph invariant.

    ``index`` is the offending edge/arc position (or ``None`` for
    whole-graph problems such as an empty colour class).
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(ValueError):
    """An operation was called on an input outside its contract."""


class TheoremViolation(RuntimeError):
    """A proved bound failed to hold.

    This always indicates an implementation bug. The offending instance is
    attached so it can be written out and replayed.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance
