import pytest

import core.oracle as oracle
from core.curves import distance
from core.errors import InvariantError
from core.models import SpaceKind
from core.oracle import (
    complement, distance_oracle, lr_product, negative_terms, partitions_in_box, pieri_product,
    qh_product, rim_hook_reduce,
)
from core.shapes import from_partition

from conftest import poset_of


def test_lr_small_products():
    assert lr_product([1], [1]) == {(2,): 1, (1, 1): 1}
    assert lr_product([2, 1], [2, 1])[(3, 2, 1)] == 2
    assert lr_product([2, 1], [2, 1], max_rows=2) == {(4, 2): 1, (3, 3): 1}


@pytest.mark.parametrize("lam,mu", [
    ([2, 1], [2, 1]),
    ([3, 1], [2, 2]),
    ([2], [3, 1, 1]),
    ([], [2, 1]),
])
def test_pieri_agrees_with_lr(lam, mu):
    assert pieri_product(lam, mu) == lr_product(lam, mu)
    assert pieri_product(lam, mu, max_rows=3) == lr_product(lam, mu, max_rows=3)


def test_rim_hook_reduce():
    assert rim_hook_reduce([3, 1], 2, 4) == (1, 1, ())
    assert rim_hook_reduce([3, 2], 2, 4) == (1, 1, (1,))
    assert rim_hook_reduce([2, 1], 2, 4) == (1, 0, (2, 1))
    assert rim_hook_reduce([1, 1, 1], 2, 4) is None


def test_quantum_products_gr24():
    assert qh_product(2, 4, [1], [2, 1]) == {((), 1): 1, ((2, 2), 0): 1}
    assert qh_product(2, 4, [1], [2, 2]) == {((1,), 1): 1}


def test_quantum_products_are_positive():
    for lam in partitions_in_box(2, 5):
        for mu in partitions_in_box(2, 5):
            assert negative_terms(qh_product(2, 5, lam, mu)) == []


def test_complement():
    assert complement(2, 4, [1]) == (2, 1)
    assert complement(2, 4, []) == (2, 2)
    assert complement(3, 6, [3, 1]) == (3, 2)


def test_partitions_in_box():
    parts = partitions_in_box(2, 4)
    assert parts == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    assert len(partitions_in_box(3, 7)) == 35


def test_distance_oracle_examples():
    assert distance_oracle(2, 4, [1], []) == 1
    assert distance_oracle(2, 4, [2, 1], []) == 1
    assert distance_oracle(2, 4, [2, 2], []) == 2
    assert distance_oracle(2, 4, [], [2, 2]) == 0


GRASSMANNIANS_UP_TO_7 = [(k, n) for n in range(3, 8) for k in range(2, n)]


@pytest.mark.parametrize("k,n", GRASSMANNIANS_UP_TO_7)
def test_distance_oracle_matches_curve_neighborhoods(k, n):
    poset = poset_of(SpaceKind.GR, k, n)
    for mu in partitions_in_box(k, n):
        for lam in partitions_in_box(k, n):
            expected = distance_oracle(k, n, mu, lam)
            got = distance(poset, from_partition(poset, mu), from_partition(poset, lam))
            assert got == expected, (mu, lam)


def test_distance_oracle_rejects_vanishing_product(monkeypatch):
    monkeypatch.setattr(oracle, "qh_product", lambda *args: {})
    with pytest.raises(InvariantError):
        oracle.distance_oracle(2, 4, [1], [])
