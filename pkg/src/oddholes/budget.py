"""Node-expansion budgets for exhaustive searches.

Every potentially explosive enumeration (induced cycles, induced paths,
subdivision search) accepts an optional Budget. The budget converts a
runaway instance into an explicit SearchBudgetExceeded instead of a wrong
or silently partial answer.
"""

from .errors import SearchBudgetExceeded

DEFAULT_LIMIT = 100_000_000


class Budget:
    """Mutable expansion counter. spend() raises once the limit is passed."""

    __slots__ = ("limit", "used")

    def __init__(self, limit=DEFAULT_LIMIT):
        self.limit = limit
        self.used = 0

    def spend(self, amount=1):
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.used, self.limit)

    def exhausted(self):
        return self.limit is not None and self.used > self.limit


def ensure_budget(budget):
    """Accept None (unlimited), an int limit, or a Budget instance."""
    if budget is None:
        return Budget(limit=None)
    if isinstance(budget, int):
        return Budget(limit=budget)
    return budget
