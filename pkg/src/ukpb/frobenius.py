"""Best fill of the max-density types for arbitrarily large budgets.

All max-density types share one profit/weight ratio, so the best fill of a
budget B is simply the heaviest representable weight <= B. Every multiple of
gcd(W1) above R**2 is representable, so a block of weight exactly t' can be
repeated as often as needed, with a DP-solved remainder t'' in [t', 2t').
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dp import build_table, traceback
from .model import DpTable, ItemType


@dataclass(frozen=True)
class N1Plan:
    types: tuple[ItemType, ...]
    gcd_w1: int
    t_prime: int
    x_prime: tuple[int, ...]
    block_profit: int
    dp2: DpTable

    @property
    def window(self) -> int:
        return self.dp2.window_capacity


def dp2_window(R: int) -> int:
    return 2 * R * R + 2 * R


def frobenius_guaranteed(target: int, weights: Sequence[int], g: int) -> bool:
    """Sufficient condition for ``target`` to be a nonnegative combination of ``weights``."""
    return target % g == 0 and target >= (min(weights) - 1) * (max(weights) - 1)


def build_n1_plan(n1_types: Sequence[ItemType], g: int, t_prime: int, R: int) -> N1Plan:
    n1_types = tuple(n1_types)
    dp2 = build_table(n1_types, dp2_window(R))
    x_prime = traceback(dp2, t_prime)
    weight = sum(c * t.weight for c, t in zip(x_prime, n1_types))
    if weight != t_prime:
        raise AssertionError(f"no exact-weight block: traceback at t'={t_prime} has weight {weight}")
    return N1Plan(n1_types, g, t_prime, tuple(x_prime), int(dp2.profit[t_prime]), dp2)


def best_n1_for_budget(plan: N1Plan, budget: int) -> tuple[int, list[int]]:
    """Best (profit, counts) over the max-density types within ``budget``."""
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if budget <= plan.window:
        return int(plan.dp2.profit[budget]), traceback(plan.dp2, budget)
    q, m = divmod(budget, plan.t_prime)
    t2 = plan.t_prime + m
    reps = q - 1
    counts = traceback(plan.dp2, t2)
    counts = [c + reps * x for c, x in zip(counts, plan.x_prime)]
    return int(plan.dp2.profit[t2]) + reps * plan.block_profit, counts


def n1_profits_for_offsets(plan: N1Plan, capacity: int, offsets: int) -> tuple[int, np.ndarray]:
    """Vectorised ``best_n1_for_budget(plan, capacity - t)`` for t in ``[0, offsets]``.

    Returns ``(base, rel)`` with profit(capacity - t) == base + rel[t]; ``base``
    carries the capacity-sized part so ``rel`` stays in machine integers.
    """
    t = np.arange(offsets + 1, dtype=np.int64)
    tp = plan.t_prime
    dp2 = plan.dp2.profit
    if capacity - offsets > plan.window:
        # every budget takes the repeated-block route
        Q, M = divmod(capacity, tp)
        shift, m = np.divmod(M - t, tp)  # floor semantics, shift <= 0
        rel = dp2[tp + m] + shift * plan.block_profit
        return (Q - 1) * plan.block_profit, rel
    # capacity <= offsets + window: everything fits machine words
    budget = capacity - t
    rel = np.empty_like(budget)
    direct = budget <= plan.window
    rel[direct] = dp2[budget[direct]]
    far = ~direct
    q, m = np.divmod(budget[far], tp)
    rel[far] = dp2[tp + m] + (q - 1) * plan.block_profit
    return 0, rel
