"""Unbounded knapsack DP over a bounded capacity window, with traceback."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .model import DpTable, ItemType

_PAD = np.iinfo(np.int64).min // 4


def _relax(profit: np.ndarray, trace: np.ndarray, p: int, w: int, tag: int) -> None:
    """One pass of ``DP(k) = max(DP(k), DP(k-w) + p)`` for increasing k.

    Along each residue class mod ``w`` the pass is a running maximum of
    ``DP(k) - i*p`` (``i`` the position within the class), so it is done as a
    cumulative max instead of a Python loop. Strict improvements set the trace.
    """
    n = len(profit)
    rows = -(-n // w)
    grid = np.full(rows * w, _PAD, dtype=np.int64)
    grid[:n] = profit
    grid = grid.reshape(rows, w)
    step = (np.arange(rows, dtype=np.int64) * p)[:, None]
    best = np.maximum.accumulate(grid - step, axis=0)
    best += step
    new = best.reshape(-1)[:n]
    improved = new > profit
    profit[improved] = new[improved]
    trace[improved] = tag


def build_table(types: Sequence[ItemType], window: int) -> DpTable:
    """Max profit with total weight <= k for every k in ``[0, window]``."""
    if window < 0:
        raise ValueError(f"window must be nonnegative, got {window}")
    types = tuple(types)
    profit = np.zeros(window + 1, dtype=np.int64)
    trace = np.zeros(window + 1, dtype=np.int32)
    updates = 0
    for j, t in enumerate(types, start=1):
        if t.weight <= window:
            _relax(profit, trace, t.profit, t.weight, j)
            updates += window - t.weight + 1
    profit.flags.writeable = False
    trace.flags.writeable = False
    return DpTable(types, window, profit, trace, updates)


def traceback(table: DpTable, k: int) -> list[int]:
    """Recover per-type counts realising ``table.profit[k]``."""
    if not 0 <= k <= table.window_capacity:
        raise IndexError(f"k={k} outside [0, {table.window_capacity}]")
    counts = [0] * len(table.types)
    weights = [t.weight for t in table.types]
    trace = table.trace
    t = k
    while trace[t]:
        tag = int(trace[t])
        w = weights[tag - 1]
        # skip the whole run of this type at stride w
        run = trace[t::-w]
        span = 16
        while True:
            off = np.flatnonzero(run[:span] != tag)
            if off.size or span >= len(run):
                n = int(off[0]) if off.size else len(run)
                break
            span *= 4
        counts[tag - 1] += n
        t -= n * w
        assert t >= 0, "corrupt DP trace"
    return counts
