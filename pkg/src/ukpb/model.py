"""Domain types for the unbounded knapsack problem with bounded coefficients.

Capacities, counts and objectives are Python ints (arbitrary precision).
Profit densities are only ever compared by cross-multiplication.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Sequence

# Keeps every DP profit (at most R * R**3) inside a signed 64-bit word.
MAX_COEFFICIENT_BOUND = 2**15

_DECIMAL = re.compile(r"[0-9]+")


class InstanceError(ValueError):
    """Raised when an instance violates its bounds or is malformed."""


class InfeasibleSolution(AssertionError):
    """Raised when a selection exceeds the capacity."""


@dataclass(frozen=True, order=True)
class ItemType:
    profit: int
    weight: int


@dataclass(frozen=True)
class Instance:
    coefficient_bound: int
    types: tuple[ItemType, ...]
    capacity: int

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))

    @property
    def R(self) -> int:
        return self.coefficient_bound

    @classmethod
    def from_pairs(cls, R: int, pairs: Sequence[tuple[int, int]], capacity: int | str) -> "Instance":
        """Build and validate an instance from ``(profit, weight)`` pairs."""
        if isinstance(capacity, str):
            capacity = parse_capacity(capacity)
        return validate_instance(cls(R, tuple(ItemType(p, w) for p, w in pairs), capacity))


@dataclass(frozen=True)
class Solution:
    counts: tuple[int, ...]
    total_weight: int
    objective: int


@dataclass(frozen=True)
class Partition:
    break_index: int
    n1_indices: tuple[int, ...]
    n2_indices: tuple[int, ...]
    residual: int
    gcd_w1: int
    t_prime: int | None = None


@dataclass(frozen=True, eq=False)
class DpTable:
    """Bounded-window unbounded DP.

    ``profit[k]`` is the best profit with total weight at most ``k``.
    ``trace[k]`` is the 1-based position of the type last added at ``k``
    in ``types``, or 0 when nothing was selected there.
    """

    types: tuple[ItemType, ...]
    window_capacity: int
    profit: "object"  # numpy int64 array
    trace: "object"  # numpy int32 array
    updates: int = field(default=0)

    @property
    def cells(self) -> int:
        return len(self.profit)


def parse_capacity(text: str | int) -> int:
    """Parse a nonnegative decimal capacity exactly."""
    if isinstance(text, bool):
        raise InstanceError(f"malformed capacity: {text!r}")
    if isinstance(text, int):
        if text < 0:
            raise InstanceError(f"negative capacity: {text}")
        return text
    s = str(text).strip()
    if s.startswith("-") and _DECIMAL.fullmatch(s[1:]):
        raise InstanceError(f"negative capacity: {s}")
    if not _DECIMAL.fullmatch(s):
        raise InstanceError(f"malformed capacity: {text!r}")
    try:
        return int(s)
    except ValueError as exc:  # e.g. int max str digits limit
        raise InstanceError(f"malformed capacity: {exc}") from None


def format_capacity(capacity: int) -> str:
    return str(capacity)


def validate_instance(inst: Instance) -> Instance:
    R = inst.coefficient_bound
    if isinstance(R, bool) or not isinstance(R, int) or R < 1:
        raise InstanceError(f"coefficient bound must be a positive integer, got {R!r}")
    if R > MAX_COEFFICIENT_BOUND:
        raise InstanceError(f"coefficient bound {R} exceeds supported maximum {MAX_COEFFICIENT_BOUND}")
    if not inst.types:
        raise InstanceError("instance has no item types")
    for j, t in enumerate(inst.types):
        for name in ("profit", "weight"):
            v = getattr(t, name)
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= R:
                raise InstanceError(
                    f"coefficient out of range: type {j} {name}={v!r} not in [1, {R}]"
                )
    parse_capacity(inst.capacity)
    return inst


def evaluate(inst: Instance, counts: Sequence[int]) -> Solution:
    """Recompute weight and objective of a selection; raise if it overflows C."""
    if len(counts) != len(inst.types):
        raise ValueError(f"expected {len(inst.types)} counts, got {len(counts)}")
    counts = tuple(int(c) for c in counts)
    if any(c < 0 for c in counts):
        raise ValueError("counts must be nonnegative")
    weight = sum(c * t.weight for c, t in zip(counts, inst.types))
    objective = sum(c * t.profit for c, t in zip(counts, inst.types))
    if weight > inst.capacity:
        raise InfeasibleSolution(f"total weight {weight} exceeds capacity {inst.capacity}")
    return Solution(counts, weight, objective)


# -- instance files ---------------------------------------------------------

def instance_to_dict(inst: Instance) -> dict:
    return {
        "R": inst.coefficient_bound,
        "capacity": format_capacity(inst.capacity),
        "types": [{"profit": t.profit, "weight": t.weight} for t in inst.types],
    }


def instance_from_dict(data: dict) -> Instance:
    try:
        R = data["R"]
        capacity = parse_capacity(data["capacity"])
        types = tuple(ItemType(t["profit"], t["weight"]) for t in data["types"])
    except (KeyError, TypeError) as exc:
        raise InstanceError(f"malformed instance document: {exc}") from None
    return validate_instance(Instance(R, types, capacity))


def dumps_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"instance is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InstanceError("instance document must be a JSON object")
    return instance_from_dict(data)


def read_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return loads_instance(fh.read())


def write_instance(inst: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_instance(inst))
