"""Exception types shared across the package."""


class OddHolesError(Exception):
    """Base class for all package-specific errors."""


class MalformedInput(OddHolesError):
    """Raised on invalid graph data: bad format, out-of-range vertex,
    self-loop, duplicate edge, or invalid generator parameters."""


class SearchBudgetExceeded(OddHolesError):
    """An exhaustive search ran out of its node-expansion budget.

    A search that raises this has produced no verdict; callers must never
    treat it as a negative answer.
    """

    def __init__(self, used, limit):
        super().__init__(f"search budget exceeded: {used} > {limit} expansions")
        self.used = used
        self.limit = limit


class NoConnection(OddHolesError):
    """No path at all exists between the two subgraphs."""


class ExhaustedAttempts(OddHolesError):
    """Rejection sampling gave up after the configured number of attempts."""
