"""Greedy/Dantzig bounds and the selection caps on lower-density types."""

from __future__ import annotations

from dataclasses import dataclass

from .model import Instance, ItemType, Partition


@dataclass(frozen=True)
class BoundReport:
    greedy_lower: int
    dantzig_upper: int
    per_type_i_bound: tuple[int, ...]
    n2_weight_cap: int
    # sharper classical cap x_j <= w_b - 1, reported for information only
    classical_count_cap: int

    def as_dict(self) -> dict:
        return {
            "greedy_lower": str(self.greedy_lower),
            "dantzig_upper": str(self.dantzig_upper),
            "per_type_i_bound": list(self.per_type_i_bound),
            "n2_weight_cap": self.n2_weight_cap,
            "classical_count_cap": self.classical_count_cap,
        }


def greedy_lower_bound(inst: Instance, part: Partition) -> int:
    types = inst.types
    b = types[part.break_index]
    value = (inst.capacity // b.weight) * b.profit
    left = part.residual
    for j, t in enumerate(types):
        if j == part.break_index or left == 0:
            continue
        take = left // t.weight
        value += take * t.profit
        left -= take * t.weight
    return value


def dantzig_upper_bound(inst: Instance, part: Partition) -> int:
    types = inst.types
    b = types[part.break_index]
    value = (inst.capacity // b.weight) * b.profit
    if len(types) > 1:
        nxt = types[1] if part.break_index == 0 else types[0]
        value += part.residual * nxt.profit // nxt.weight
    return value


def determinant_test(item: ItemType, brk: ItemType, r: int, i: int) -> bool:
    """Sign test ``det[[p_j, w_j - r/i], [p_b, w_b]] > 0`` with the ``1/i`` cleared."""
    if i < 1:
        raise ValueError("i must be a positive integer")
    return i * (item.profit * brk.weight - brk.profit * item.weight) + brk.profit * r > 0


def largest_passing_i(item: ItemType, brk: ItemType, r: int) -> int:
    """Largest i >= 1 for which the determinant test holds, 0 if none.

    The test is antitone in i for strictly lower-density types, so the
    passing set is ``1..i_max``.
    """
    gap = brk.profit * item.weight - item.profit * brk.weight
    if gap <= 0:
        raise ValueError("type does not have strictly lower density than the break type")
    # i * gap < p_b * r
    return max(0, (brk.profit * r - 1) // gap)


def selection_bound(R: int) -> int:
    if R < 1:
        raise ValueError("R must be positive")
    return R * R


def n2_weight_cap(R: int) -> int:
    if R < 1:
        raise ValueError("R must be positive")
    return R**3


def bound_report(inst: Instance, part: Partition) -> BoundReport:
    """Collect bounds for a normalized, partitioned instance."""
    b = inst.types[part.break_index]
    per_type = tuple(
        largest_passing_i(inst.types[j], b, part.residual)
        for j in part.n2_indices
    )
    return BoundReport(
        greedy_lower=greedy_lower_bound(inst, part),
        dantzig_upper=dantzig_upper_bound(inst, part),
        per_type_i_bound=per_type,
        n2_weight_cap=n2_weight_cap(inst.coefficient_bound),
        classical_count_cap=b.weight - 1,
    )
