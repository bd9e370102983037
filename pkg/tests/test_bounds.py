import random

import pytest
from hypothesis import given, strategies as st

from ukpb.bounds import (
    bound_report,
    dantzig_upper_bound,
    determinant_test,
    greedy_lower_bound,
    largest_passing_i,
    n2_weight_cap,
    selection_bound,
)
from ukpb.model import ItemType
from ukpb.oracle import oracle_dp
from ukpb.preprocess import normalize, partition

from conftest import make


def _prepared(R, pairs, C):
    inst, _ = normalize(make(R, pairs, C))
    return inst, partition(inst)


def test_greedy_example():
    assert greedy_lower_bound(*_prepared(5, [(5, 3), (3, 2)], 100)) == 165


def test_greedy_single_type():
    assert greedy_lower_bound(*_prepared(3, [(3, 2)], 7)) == 9


def test_greedy_fills_residual_in_density_order():
    # 11 = 2*5 + 1: residual 1 fits the unit type
    assert greedy_lower_bound(*_prepared(7, [(7, 5), (1, 1)], 11)) == 15


def test_dantzig_example():
    assert dantzig_upper_bound(*_prepared(5, [(5, 3), (3, 2)], 100)) == 166


def test_dantzig_single_type():
    assert dantzig_upper_bound(*_prepared(3, [(3, 2)], 7)) == 9


def test_sandwich_random():
    rng = random.Random(21)
    for _ in range(400):
        R = rng.randint(1, 6)
        pairs = [(rng.randint(1, R), rng.randint(1, R)) for _ in range(rng.randint(1, R))]
        C = rng.randint(0, 200)
        inst, part = _prepared(R, pairs, C)
        opt = oracle_dp(inst).objective
        assert greedy_lower_bound(inst, part) <= opt <= dantzig_upper_bound(inst, part)


def test_determinant_examples():
    j, b = ItemType(3, 2), ItemType(5, 3)
    assert determinant_test(j, b, 1, 4)  # 4*(9-10) + 5 = 1
    assert not determinant_test(j, b, 1, 5)  # 5*(9-10) + 5 = 0
    assert largest_passing_i(j, b, 1) == 4


def test_determinant_zero_residual():
    b = ItemType(5, 3)
    for j in (ItemType(3, 2), ItemType(4, 5), ItemType(1, 5)):
        for i in range(1, 30):
            assert not determinant_test(j, b, 0, i)
        assert largest_passing_i(j, b, 0) == 0


def test_determinant_rejects_nonpositive_i():
    with pytest.raises(ValueError):
        determinant_test(ItemType(3, 2), ItemType(5, 3), 1, 0)


_pt = st.tuples(st.integers(1, 12), st.integers(1, 12))


@given(_pt, _pt, st.integers(0, 11))
def test_determinant_antitone_and_below_pb_wb(jt, bt, r):
    j, b = ItemType(*jt), ItemType(*bt)
    if b.profit * j.weight - j.profit * b.weight < 1:
        return
    r %= b.weight
    passing = [i for i in range(1, 200) if determinant_test(j, b, r, i)]
    assert passing == list(range(1, len(passing) + 1))
    assert len(passing) == largest_passing_i(j, b, r)
    R = max(jt + bt)
    for i in passing:
        assert i < b.profit * b.weight <= R * R


def test_caps():
    assert selection_bound(5) == 25
    assert n2_weight_cap(5) == 125
    assert selection_bound(1) == 1 and n2_weight_cap(1) == 1
    with pytest.raises(ValueError):
        selection_bound(0)


def test_bound_report_example():
    rep = bound_report(*_prepared(5, [(5, 3), (3, 2), (4, 5)], 100))
    assert (rep.greedy_lower, rep.dantzig_upper) == (165, 166)
    assert rep.per_type_i_bound == (4, 0)
    assert rep.n2_weight_cap == 125
    assert rep.as_dict()["dantzig_upper"] == "166"
