import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mullergames.family import SubsetFamily


def test_insert_and_contains():
    fam = SubsetFamily(3)
    assert not fam.contains(0b101)
    fam.insert(0b101)
    assert fam.contains(0b101) and fam.count == 1
    fam.insert(0b101)
    assert fam.count == 1


def test_no_subset_closure():
    fam = SubsetFamily(2, [0b01, 0b10])
    assert 0b11 not in fam


def test_traversal_is_ascending():
    fam = SubsetFamily(3)
    for k in (3, 1, 2):
        fam.insert(k)
    assert list(fam) == [1, 2, 3]
    assert list(SubsetFamily(3)) == []
    full = SubsetFamily(4, range(1, 16))
    assert list(full) == list(range(1, 16))
    fam.insert(7)
    assert list(fam)[-1] == 7


def test_key_range_and_freeze():
    fam = SubsetFamily(2)
    with pytest.raises(ValueError):
        fam.insert(4)
    with pytest.raises(ValueError):
        fam.insert(-1)
    fam.insert(1)
    fam.freeze()
    assert fam.frozen
    with pytest.raises(TypeError):
        fam.insert(2)
    assert not fam.table.flags.writeable


def test_copy_and_equality():
    fam = SubsetFamily(3, [1, 6])
    other = fam.copy()
    assert other == fam
    other.insert(2)
    assert other != fam and 2 not in fam


@given(st.lists(st.tuples(st.sampled_from(["ins", "del", "has"]), st.integers(0, 255)), min_size=1, max_size=200))
def test_against_builtin_set(ops):
    fam = SubsetFamily(8)
    model = set()
    for op, key in ops:
        if op == "ins":
            fam.insert(key)
            model.add(key)
        elif op == "del":
            fam.remove(key)
            model.discard(key)
        else:
            assert fam.contains(key) == (key in model)
    assert list(fam) == sorted(model)
    assert len(fam) == len(model)


def test_ten_thousand_random_operations():
    rng = np.random.default_rng(3)
    fam = SubsetFamily(10)
    model = set()
    for op, key in zip(rng.integers(0, 3, 12000), rng.integers(0, 1024, 12000)):
        key = int(key)
        if op == 0:
            fam.insert(key)
            model.add(key)
        elif op == 1:
            fam.remove(key)
            model.discard(key)
        else:
            assert (key in fam) == (key in model)
        assert fam.count == len(model)
    assert list(fam) == sorted(model)
