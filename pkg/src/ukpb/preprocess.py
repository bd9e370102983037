"""Instance normalization and the break-type partition."""

from __future__ import annotations

from functools import cmp_to_key
from typing import Sequence

from .model import Instance, ItemType, Partition


def _density_cmp(a: ItemType, b: ItemType) -> int:
    # higher density first, then smaller weight, then smaller profit
    lhs, rhs = a.profit * b.weight, b.profit * a.weight
    if lhs != rhs:
        return -1 if lhs > rhs else 1
    if a.weight != b.weight:
        return -1 if a.weight < b.weight else 1
    return (a.profit > b.profit) - (a.profit < b.profit)


def _dominance_survivors(types: Sequence[ItemType]) -> list[int]:
    best: dict[int, int] = {}
    for j, t in enumerate(types):
        k = best.get(t.weight)
        if k is None or t.profit > types[k].profit:
            best[t.weight] = j
    return sorted(best.values())


def dominance_reduce(types: Sequence[ItemType]) -> list[ItemType]:
    """Keep only the most profitable type of each weight, in input order."""
    return [types[j] for j in _dominance_survivors(types)]


def sort_by_density(types: Sequence[ItemType]) -> list[ItemType]:
    return sorted(types, key=cmp_to_key(_density_cmp))


def normalize(inst: Instance) -> tuple[Instance, tuple[int, ...]]:
    """Dominance-reduce and density-sort ``inst``.

    Returns the normalized instance and, for each of its types, the index of
    the originating type in ``inst.types``.
    """
    keep = _dominance_survivors(inst.types)
    order = sorted(keep, key=cmp_to_key(lambda a, b: _density_cmp(inst.types[a], inst.types[b])))
    types = tuple(inst.types[j] for j in order)
    return Instance(inst.coefficient_bound, types, inst.capacity), tuple(order)


def gcd_w1(weights: Sequence[int]) -> int:
    """Greatest common divisor by a left fold of Euclid's algorithm."""
    if not weights:
        raise ValueError("gcd of an empty weight list")
    g = 0
    for w in weights:
        a, b = g, int(w)
        while b:
            a, b = b, a % b
        g = a
    return g


def find_t_prime(g: int, R: int) -> int:
    """Smallest multiple of ``g`` in ``(R**2, R**2 + R]``."""
    if not 1 <= g <= R:
        raise ValueError(f"need 1 <= g <= R, got g={g}, R={R}")
    t = (R * R // g + 1) * g
    assert R * R < t <= R * R + R
    return t


def partition(inst: Instance) -> Partition:
    """Split a normalized instance into max-density and lower-density types."""
    types = inst.types
    b = 0
    pb, wb = types[b].profit, types[b].weight
    n1, n2 = [], []
    for j, t in enumerate(types):
        lhs, rhs = t.profit * wb, pb * t.weight
        if lhs == rhs:
            n1.append(j)
        elif lhs < rhs:
            n2.append(j)
        else:
            raise ValueError("instance is not sorted by density")
    g = gcd_w1([types[j].weight for j in n1])
    return Partition(
        break_index=b,
        n1_indices=tuple(n1),
        n2_indices=tuple(n2),
        residual=inst.capacity % wb,
        gcd_w1=g,
        t_prime=find_t_prime(g, inst.coefficient_bound),
    )
