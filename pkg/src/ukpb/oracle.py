"""Reference solvers with no capacity tricks, for cross-checking."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .dp import build_table, traceback
from .model import Instance, ItemType, Solution, evaluate, validate_instance

ENUMERATION_LIMIT = 10**7
DP_CAPACITY_LIMIT = 10**8


class InstanceTooLarge(ValueError):
    pass


def oracle_enumerate(inst: Instance) -> Solution:
    """Try every count vector; keep the first best found."""
    validate_instance(inst)
    C = inst.capacity
    types = inst.types
    size = math.prod(C // t.weight + 1 for t in types)
    if size > ENUMERATION_LIMIT:
        raise InstanceTooLarge(f"{size} count vectors exceed the enumeration limit")
    best_value, best_counts = -1, None
    counts = [0] * len(types)

    def walk(j: int, left: int, value: int) -> None:
        nonlocal best_value, best_counts
        if j == len(types):
            if value > best_value:
                best_value, best_counts = value, tuple(counts)
            return
        t = types[j]
        for x in range(left // t.weight + 1):
            counts[j] = x
            walk(j + 1, left - x * t.weight, value + x * t.profit)
        counts[j] = 0

    walk(0, C, 0)
    return evaluate(inst, best_counts)


def oracle_dp(inst: Instance) -> Solution:
    """Full-capacity unbounded DP over all types."""
    validate_instance(inst)
    if inst.capacity > DP_CAPACITY_LIMIT:
        raise InstanceTooLarge(f"capacity {inst.capacity} exceeds the DP oracle limit")
    table = build_table(inst.types, inst.capacity)
    return evaluate(inst, traceback(table, inst.capacity))


# -- all capacities at once -------------------------------------------------

@lru_cache(maxsize=64)
def _count_vectors(weights: tuple[int, ...], max_weight: int) -> tuple[np.ndarray, np.ndarray]:
    """Every count vector over ``weights`` with total weight <= ``max_weight``."""
    vecs = np.zeros((1, 0), dtype=np.int64)
    load = np.zeros(1, dtype=np.int64)
    for w in weights:
        reps = (max_weight - load) // w + 1
        idx = np.repeat(np.arange(len(load)), reps)
        start = np.cumsum(reps) - reps
        x = np.arange(len(idx)) - np.repeat(start, reps)
        vecs = np.column_stack([vecs[idx], x])
        load = load[idx] + x * w
    vecs.flags.writeable = False
    load.flags.writeable = False
    return vecs, load


def enumeration_profile(
    types: Sequence[ItemType],
    max_capacity: int,
    admissible=None,
    filler: int | None = None,
) -> np.ndarray:
    """Optimal objective for every capacity 0..max_capacity by enumeration.

    All count vectors over the non-filler types are listed explicitly; the
    filler type then takes as many copies as still fit, which is optimal for
    it once the others are fixed. ``admissible(vecs, types)`` may mask out
    vectors (over the non-filler types) to get a restricted optimum.
    Returns -1 where no admissible vector fits.
    """
    types = list(types)
    if filler is None:
        filler = min(range(len(types)), key=lambda j: types[j].weight)
    rest = [t for j, t in enumerate(types) if j != filler]
    fw, fp = types[filler].weight, types[filler].profit
    vecs, load = _count_vectors(tuple(t.weight for t in rest), max_capacity)
    value = vecs @ np.array([t.profit for t in rest], dtype=np.int64)
    if admissible is not None:
        keep = admissible(vecs, rest)
        vecs, load, value = vecs[keep], load[keep], value[keep]
    exact = np.full(max_capacity + 1, -1, dtype=np.int64)
    np.maximum.at(exact, load, value)
    cap = np.arange(max_capacity + 1)
    out = np.full(max_capacity + 1, -1, dtype=np.int64)
    for s in np.flatnonzero(exact >= 0):
        cand = exact[s] + ((cap[s:] - s) // fw) * fp
        np.maximum(out[s:], cand, out=out[s:])
    return out
