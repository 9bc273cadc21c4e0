class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class SearchLimitExceeded(RuntimeError):
    """A bounded combinatorial search ran out of budget before deciding."""
