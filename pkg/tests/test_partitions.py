import itertools

import pytest
from hypothesis import given, strategies as st

from oddsymp.partitions import (
    FrobeniusHook, Partition, as_partition, conjugate, frobenius, from_frobenius,
    partitions_of, partitions_upto, standard_tableaux_count, strict_partitions,
)


def brute_standard_tableaux(shape):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for order in itertools.permutations(range(len(cells))):
        val = dict(zip(cells, order))
        if all(val[(i, j)] < val.get((i, j + 1), 99) and val[(i, j)] < val.get((i + 1, j), 99) for i, j in cells):
            count += 1
    return count


def test_normalization():
    assert as_partition("2,1,0,0") == Partition((2, 1))
    assert as_partition([0]) == Partition()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))


def test_partition_counts():
    assert [len(list(partitions_of(d))) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions_of(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert strict_partitions(4) == [(4,), (3, 1)]
    assert all(p.length <= 2 for p in partitions_upto(5, max_len=2))


@pytest.mark.parametrize("shape", [(1,), (2, 1), (2, 2), (3, 1), (3, 2), (2, 1, 1), (3, 2, 1)])
def test_hook_length_formula(shape):
    assert standard_tableaux_count(shape) == brute_standard_tableaux(shape)


def test_frobenius_examples():
    assert frobenius((3, 2, 2, 1)) == FrobeniusHook((2, 0), (3, 1))
    assert from_frobenius(FrobeniusHook((1,), (2,))) == (2, 1, 1)


@given(st.integers(0, 9).flatmap(lambda d: st.sampled_from(list(partitions_of(d)))))
def test_conjugation_and_frobenius_round_trip(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight
    assert from_frobenius(frobenius(lam)) == lam
    assert frobenius(lam).weight == lam.weight
