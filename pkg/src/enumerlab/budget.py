"""Enumeration budget: a global guard against accidentally materializing
astronomically large finite sets.

Operations that enumerate 2^k items take an optional ``budget`` argument;
when omitted, the default budget is 2^24 items, overridable through the
ENUMERLAB_BUDGET environment variable.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 1 << 24

_ENV_VAR = "ENUMERLAB_BUDGET"


class BudgetError(Exception):
    """Raised when an enumeration would exceed the configured item budget."""

    def __init__(self, requested: int, budget: int):
        self.requested = requested
        self.budget = budget
        super().__init__(
            f"enumeration of {requested} items exceeds budget of {budget}"
        )


def enumeration_budget() -> int:
    """Current default budget (env override included)."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{_ENV_VAR} must be positive, got {raw}")
    return value


def check_budget(requested: int, budget: int | None = None) -> None:
    """Raise BudgetError if `requested` items exceed the effective budget."""
    effective = enumeration_budget() if budget is None else budget
    if requested > effective:
        raise BudgetError(requested, effective)
