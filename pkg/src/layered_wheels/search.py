"""Node budgets for the exponential searches."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """A search ran out of node expansions before finishing."""


def default_budget(fallback: int = DEFAULT_BUDGET) -> int:
    """``LW_BUDGET`` from the environment if set, else ``fallback``."""
    raw = os.environ.get("LW_BUDGET")
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError("LW_BUDGET must be a positive integer")
        return value
    return fallback


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out
