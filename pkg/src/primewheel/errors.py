"""Shared error types."""

from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A scan, sieve or table build would exceed its configured budget.

    Carries the budget that was in force and the size the operation would
    actually need, so callers can retry with an explicit override.
    """

    def __init__(self, required: int, budget: int, what: str = "scan"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {required} but the budget is {budget}; "
            f"raise the budget to at least {required} to run this"
        )
