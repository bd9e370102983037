"""Exact unbounded knapsack solver whose cost depends on the coefficient bound, not the capacity."""

from .model import (
    DpTable,
    Instance,
    InstanceError,
    InfeasibleSolution,
    ItemType,
    Partition,
    Solution,
    evaluate,
    parse_capacity,
    validate_instance,
)
from .solver import SolveStats, solve, solve_with_report

__all__ = [
    "DpTable",
    "Instance",
    "InstanceError",
    "InfeasibleSolution",
    "ItemType",
    "Partition",
    "Solution",
    "SolveStats",
    "evaluate",
    "parse_capacity",
    "solve",
    "solve_with_report",
    "validate_instance",
]
