from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fec_census.orbifold import (
    TUBULAR_TUPLES,
    Classification,
    WeightTuple,
    classify,
    invariants,
    subtuple,
)

orders = st.lists(st.integers(min_value=1, max_value=12), max_size=7)


def test_tubular_invariants_from_table():
    inv = invariants(WeightTuple((2, 3, 6)))
    assert (inv.lcm, inv.mu, inv.chi) == (6, 10, 0)


def test_empty_tuple():
    inv = invariants(WeightTuple(()))
    assert (inv.lcm, inv.mu, inv.chi) == (1, 2, 2)


def test_unit_entry_kept():
    inv = invariants(WeightTuple((2, 2, 2, 1)))
    assert (inv.lcm, inv.mu, inv.chi) == (2, 5, Fraction(1, 2))
    assert WeightTuple((2, 2, 2, 1)).orders == (1, 2, 2, 2)


@pytest.mark.parametrize("A, kind", [
    ((2, 2, 2, 2), Classification.TUBULAR),
    ((2, 2, 2), Classification.DOMESTIC),
    ((2, 3, 7), Classification.WILD),
    ((), Classification.DOMESTIC),
])
def test_classify(A, kind):
    assert classify(WeightTuple(A)) is kind


def test_tubular_classification_is_complete():
    # chi = 0 forces every order <= 6 and at most 4 points of order >= 2
    import itertools
    found = set()
    for r in range(1, 5):
        for A in itertools.combinations_with_replacement(range(2, 7), r):
            if invariants(WeightTuple(A)).chi == 0:
                found.add(WeightTuple(A))
    assert found == set(TUBULAR_TUPLES)


def test_canonical_equality_and_parse():
    assert WeightTuple((6, 2, 3)) == WeightTuple((2, 3, 6))
    assert WeightTuple.parse(" 6,3, 2") == WeightTuple((2, 3, 6))
    assert str(WeightTuple.parse("6,3,2")) == "2,3,6"
    assert WeightTuple.parse("") == WeightTuple(())


@pytest.mark.parametrize("bad", ["2,x", "2,,3", "0,2", "-1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        WeightTuple.parse(bad)


def test_subtuple_examples():
    assert subtuple(WeightTuple((3, 3, 3)), 1, 2) == WeightTuple((1, 3, 3))
    assert subtuple(WeightTuple((2, 4, 4)), 2, 1) == WeightTuple((2, 3, 4))
    assert invariants(subtuple(WeightTuple((3, 3, 3)), 1, 1)).chi == Fraction(1, 6)


@pytest.mark.parametrize("i, j", [(0, 1), (4, 1), (1, 0), (1, 3)])
def test_subtuple_rejects(i, j):
    with pytest.raises(ValueError):
        subtuple(WeightTuple((3, 3, 3)), i, j)


def test_tubular_subtuples_are_domestic():
    for A in TUBULAR_TUPLES:
        for i, a in enumerate(A.orders, start=1):
            for j in range(1, a):
                assert classify(subtuple(A, i, j)) is Classification.DOMESTIC


@given(orders, st.randoms())
def test_invariants_order_insensitive(A, rnd):
    shuffled = list(A)
    rnd.shuffle(shuffled)
    assert invariants(WeightTuple(A)) == invariants(WeightTuple(shuffled))


@given(orders.filter(lambda A: any(a >= 2 for a in A)), st.data())
def test_subtuple_chi_shift(A, data):
    W = WeightTuple(A)
    i = data.draw(st.sampled_from([k for k, a in enumerate(W.orders, 1) if a >= 2]))
    a = W.orders[i - 1]
    j = data.draw(st.integers(1, a - 1))
    assert invariants(subtuple(W, i, j)).chi - invariants(W).chi == Fraction(j, a * (a - j))
