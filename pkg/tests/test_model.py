import pytest
from hypothesis import given, strategies as st

from ukpb.model import (
    InfeasibleSolution,
    Instance,
    InstanceError,
    ItemType,
    dumps_instance,
    evaluate,
    format_capacity,
    loads_instance,
    parse_capacity,
    validate_instance,
)

from conftest import make


def test_accepts_in_range_instance():
    inst = make(5, [(5, 3), (3, 2)], 100)
    assert validate_instance(inst) is inst


def test_rejects_profit_above_bound():
    with pytest.raises(InstanceError, match="type 0 profit=6"):
        make(5, [(6, 3)], 10)


def test_rejects_zero_weight():
    with pytest.raises(InstanceError, match="weight=0"):
        make(5, [(1, 0)], 10)


def test_huge_decimal_capacity():
    text = "1" + "0" * 1000
    inst = make(3, [(1, 1)], text)
    assert inst.capacity == 10**1000
    assert format_capacity(inst.capacity) == text


@pytest.mark.parametrize("bad", ["-5", "12a", "", "1e6", " ", "+3"])
def test_rejects_malformed_capacity(bad):
    with pytest.raises(InstanceError):
        parse_capacity(bad)


def test_rejects_negative_int_capacity():
    with pytest.raises(InstanceError, match="negative"):
        validate_instance(Instance(3, (ItemType(1, 1),), -1))


def test_rejects_empty_types():
    with pytest.raises(InstanceError, match="no item types"):
        make(3, [], 5)


def test_rejects_oversized_bound():
    with pytest.raises(InstanceError, match="exceeds"):
        make(2**15 + 1, [(1, 1)], 5)


def test_evaluate_example():
    sol = evaluate(make(5, [(5, 3), (3, 2)], 100), (32, 2))
    assert (sol.total_weight, sol.objective) == (100, 166)


def test_evaluate_zero_counts():
    sol = evaluate(make(5, [(5, 3), (3, 2)], 0), (0, 0))
    assert (sol.total_weight, sol.objective) == (0, 0)


def test_evaluate_flags_infeasible():
    inst = make(6, [(2, 4), (3, 6)], 10**18)
    evaluate(inst, (0, 10**18 // 6))
    with pytest.raises(InfeasibleSolution):
        evaluate(inst, (0, 10**18 // 6 + 1))


def test_evaluate_wrong_length():
    with pytest.raises(ValueError):
        evaluate(make(5, [(5, 3)], 10), (1, 1))


@given(st.integers(min_value=0, max_value=10**200))
def test_capacity_roundtrip(c):
    assert parse_capacity(format_capacity(c)) == c
    assert format_capacity(parse_capacity(str(c))) == str(c)


def test_instance_document_roundtrip():
    inst = make(7, [(7, 3), (2, 2), (2, 2)], "98765432109876543210")
    text = dumps_instance(inst)
    back = loads_instance(text)
    assert back == inst
    assert dumps_instance(back) == text


def test_instance_document_rejects_garbage():
    with pytest.raises(InstanceError):
        loads_instance("{not json")
    with pytest.raises(InstanceError):
        loads_instance('{"R": 3, "types": []}')
