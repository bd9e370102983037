"""Capacity-independent exact solver.

Lower-density types never need more than R**3 weight in some optimal
solution, so they are solved by one DP over that window. For every split
t of the capacity, the max-density types take the remaining C - t, which
is answered in constant time from a second DP of size 2R^2 + 2R.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .bounds import BoundReport, bound_report, n2_weight_cap
from .dp import build_table, traceback
from .frobenius import best_n1_for_budget, build_n1_plan, n1_profits_for_offsets
from .model import Instance, Solution, evaluate, validate_instance
from .preprocess import normalize, partition


@dataclass
class SolveStats:
    dp1_cells: int = 0
    dp2_cells: int = 0
    dp1_updates: int = 0
    dp2_updates: int = 0
    split_candidates: int = 0
    best_split: int = 0
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def dp_updates(self) -> int:
        return self.dp1_updates + self.dp2_updates

    @property
    def peak_cells(self) -> int:
        return self.dp1_cells + self.dp2_cells

    def as_dict(self) -> dict:
        return {
            "dp1_cells": self.dp1_cells,
            "dp2_cells": self.dp2_cells,
            "dp1_updates": self.dp1_updates,
            "dp2_updates": self.dp2_updates,
            "dp_updates": self.dp_updates,
            "split_candidates": self.split_candidates,
            "best_split": self.best_split,
            "timings": dict(self.timings),
        }


def _solve(inst: Instance, with_report: bool):
    clock = time.perf_counter
    stats = SolveStats()
    t0 = clock()

    validate_instance(inst)
    norm, origin = normalize(inst)
    part = partition(norm)
    R, C = norm.coefficient_bound, norm.capacity
    t1 = clock()

    n2_types = [norm.types[j] for j in part.n2_indices]
    n1_types = [norm.types[j] for j in part.n1_indices]
    window1 = min(n2_weight_cap(R), C)
    dp1 = build_table(n2_types, window1)
    t2 = clock()

    plan = build_n1_plan(n1_types, part.gcd_w1, part.t_prime, R)
    t3 = clock()

    base, rel = n1_profits_for_offsets(plan, C, window1)
    rel = rel + dp1.profit
    k = int(np.argmax(rel))  # first maximum, i.e. smallest t
    objective = base + int(rel[k])
    t4 = clock()

    counts = [0] * len(inst.types)
    for j, c in zip(part.n2_indices, traceback(dp1, k)):
        counts[origin[j]] += c
    n1_profit, n1_counts = best_n1_for_budget(plan, C - k)
    for j, c in zip(part.n1_indices, n1_counts):
        counts[origin[j]] += c
    sol = evaluate(inst, counts)
    if sol.objective != objective:
        raise AssertionError(f"reconstructed objective {sol.objective} != table value {objective}")
    t5 = clock()

    stats.dp1_cells = dp1.cells
    stats.dp2_cells = plan.dp2.cells
    stats.dp1_updates = dp1.updates
    stats.dp2_updates = plan.dp2.updates
    stats.split_candidates = window1 + 1
    stats.best_split = k
    stats.timings = {
        "preprocess": t1 - t0,
        "dp1": t2 - t1,
        "dp2": t3 - t2,
        "combine": t4 - t3,
        "reconstruct": t5 - t4,
        "total": t5 - t0,
    }
    report = bound_report(norm, part) if with_report else None
    return sol, report, stats


def solve(inst: Instance) -> Solution:
    """Exact optimum of ``inst``; counts follow ``inst.types`` order."""
    return _solve(inst, False)[0]


def solve_with_report(inst: Instance) -> tuple[Solution, BoundReport, SolveStats]:
    return _solve(inst, True)
