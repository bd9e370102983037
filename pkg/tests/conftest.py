import itertools

import pytest

from ukpb.model import Instance, ItemType


def literal_unbounded_dp(types, window):
    """Textbook double loop, one cell at a time; returns (profit, trace) lists."""
    profit = [0] * (window + 1)
    trace = [0] * (window + 1)
    for j, t in enumerate(types, start=1):
        for k in range(t.weight, window + 1):
            cand = profit[k - t.weight] + t.profit
            if cand > profit[k]:
                profit[k] = cand
                trace[k] = j
    return profit, trace


def brute_best(types, capacity):
    """Max profit over all count vectors with weight <= capacity."""
    ranges = [range(capacity // t.weight + 1) for t in types]
    best = 0
    for xs in itertools.product(*ranges):
        w = sum(x * t.weight for x, t in zip(xs, types))
        if w <= capacity:
            best = max(best, sum(x * t.profit for x, t in zip(xs, types)))
    return best


def make(R, pairs, C):
    return Instance.from_pairs(R, pairs, C)


def types_of(pairs):
    return [ItemType(p, w) for p, w in pairs]


@pytest.fixture
def small_instance():
    return make(5, [(5, 3), (3, 2), (4, 5)], 100)


# -- acceptance summary -----------------------------------------------------

_CRITERIA = []


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title, self.detail = number, title, ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number} [{status}] {self.title}"
        if self.detail:
            line += f": {self.detail}"
        if exc is not None:
            line += f" ({exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        _CRITERIA.append((self.number, line))
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
