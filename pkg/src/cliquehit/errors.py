"""Exception types shared across the package."""


class CliquehitError(Exception):
    """Base class for failures raised by this package."""


class BudgetExceededError(CliquehitError, RuntimeError):
    """An exact search hit its node or size budget before finishing.

    Raised so callers never mistake an aborted search for a proven
    negative answer. `nodes` holds the amount of work done when known.
    """

    def __init__(self, message: str, nodes: int | None = None):
        super().__init__(message)
        self.nodes = nodes


class InvariantViolationError(CliquehitError, RuntimeError):
    """An internal guarantee failed. Always a bug, never bad input."""
