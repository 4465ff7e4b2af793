"""Step budgets shared by the exponential searches."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Optional, TypeVar

T = TypeVar("T")

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"


class BudgetExhausted(Exception):
    def __init__(self, steps: int):
        super().__init__(f"step budget exhausted after {steps} steps")
        self.steps = steps


class Budget:
    """Counts candidate-set expansions; ``limit=None`` means unlimited."""

    def __init__(self, limit: Optional[int] = None):
        if limit is not None and limit < 0:
            raise ValueError("budget must be non-negative")
        self.limit = limit
        self.steps = 0

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.limit is not None and self.steps > self.limit:
            raise BudgetExhausted(self.steps)

    @property
    def exhaustive(self) -> bool:
        return self.limit is None


def as_budget(budget: "Budget | int | None") -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


@dataclass(frozen=True)
class SearchResult(Generic[T]):
    """Outcome of a budgeted search.

    ``status`` is ``"found"``, ``"absent"`` (the search was exhaustive) or
    ``"inconclusive"`` (the budget ran out first).
    """

    status: str
    witness: Optional[T] = None
    steps: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def absent(self) -> bool:
        return self.status == ABSENT

    @property
    def inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE
