"""Seeded benchmark instance families."""

from __future__ import annotations

import random
import re

from .model import Instance, InstanceError, ItemType, parse_capacity, validate_instance

FAMILIES = ("uncorrelated", "weakly-correlated", "strongly-correlated", "subset-sum")

_POWER = re.compile(r"\s*10\s*\^\s*([0-9]+)\s*")


def parse_capacity_spec(spec: str | int) -> int:
    """Accept a plain decimal or the ``10^k`` shorthand."""
    if isinstance(spec, str):
        m = _POWER.fullmatch(spec)
        if m:
            return 10 ** int(m.group(1))
    return parse_capacity(spec)


def random_types(family: str, R: int, n: int, rng: random.Random) -> list[ItemType]:
    if family not in FAMILIES:
        raise InstanceError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    spread = -(-R // 10)
    out = []
    for _ in range(n):
        w = rng.randint(1, R)
        if family == "uncorrelated":
            p = rng.randint(1, R)
        elif family == "weakly-correlated":
            p = rng.randint(max(1, w - spread), min(R, w + spread))
        elif family == "strongly-correlated":
            p = min(R, w + spread)
        else:
            p = w
        out.append(ItemType(p, w))
    return out


def generate_instance(family: str, R: int, capacity, rng: random.Random, n_types: int | None = None) -> Instance:
    types = random_types(family, R, R if n_types is None else n_types, rng)
    return validate_instance(Instance(R, tuple(types), parse_capacity_spec(capacity)))


def generate_batch(family: str, R: int, count: int, capacity, seed: int, n_types: int | None = None):
    """Yield ``(name, instance)`` pairs, deterministic for ``seed``."""
    rng = random.Random(seed)
    for i in range(count):
        yield f"{family}_R{R}_s{seed}_{i:04d}", generate_instance(family, R, capacity, rng, n_types)


def ladder_types(R: int) -> list[ItemType]:
    """One dense unit-weight type plus ``(w, w)`` for w = 2..R.

    Gives R - 1 strictly lower-density types at every R, so DP work over
    the lower-density window scales like R**4.
    """
    return [ItemType(R, 1)] + [ItemType(w, w) for w in range(2, R + 1)]
