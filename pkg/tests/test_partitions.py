import math

import pytest

from schurcalc.partitions import (
    Partition,
    SemistandardTableau,
    StrictPartition,
    conjugate,
    enumerate_partitions,
    enumerate_ssyt,
    enumerate_strict_partitions,
    hook_contains,
    partitions_up_to,
    rectangle_dual,
    staircase,
    strict_complement,
)


def test_construction_strips_zeros_and_validates():
    assert Partition([3, 1, 0, 0]).parts == (3, 1)
    assert Partition().parts == ()
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    with pytest.raises(ValueError):
        StrictPartition([2, 2])


def test_conjugate_examples():
    assert conjugate(Partition([3, 1])) == Partition([2, 1, 1])
    assert conjugate(Partition()) == Partition()
    assert conjugate(Partition([2, 2])) == Partition([2, 2])


def test_conjugate_is_involution_through_weight_12():
    for lam in partitions_up_to(12):
        assert lam.conjugate().conjugate() == lam


def test_rectangle_dual_examples():
    assert rectangle_dual(Partition([1]), 2, 4) == Partition([2, 1])
    assert rectangle_dual(Partition(), 2, 4) == Partition([2, 2])
    assert rectangle_dual(Partition([2, 2]), 2, 4) == Partition()
    with pytest.raises(ValueError):
        rectangle_dual(Partition([3]), 2, 4)


def test_rectangle_dual_involution_and_weight():
    for n in range(2, 7):
        for r in range(1, n):
            cols = n - r
            for d in range(r * cols + 1):
                for lam in enumerate_partitions(d, max_part=cols, max_length=r):
                    dual = rectangle_dual(lam, r, n)
                    assert rectangle_dual(dual, r, n) == lam
                    assert lam.weight + dual.weight == r * cols


def test_strict_complement_examples():
    assert strict_complement(StrictPartition([1]), 2) == StrictPartition([2])
    for n in range(1, 7):
        assert strict_complement(staircase(n), n) == StrictPartition()
    assert strict_complement(StrictPartition([3, 1]), 3) == StrictPartition([2])
    with pytest.raises(ValueError):
        strict_complement(StrictPartition([4]), 3)


def test_strict_complement_involution():
    for n in range(1, 7):
        top = n * (n + 1) // 2
        for d in range(top + 1):
            for mu in enumerate_strict_partitions(d, n):
                dual = strict_complement(mu, n)
                assert strict_complement(dual, n) == mu
                assert mu.weight + dual.weight == top


def test_enumerate_partitions_counts_and_order():
    counts = [len(enumerate_partitions(d)) for d in range(10)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert enumerate_partitions(2) == [Partition([2]), Partition([1, 1])]
    assert enumerate_partitions(4, max_part=2) == [
        Partition([2, 2]), Partition([2, 1, 1]), Partition([1, 1, 1, 1])]
    assert enumerate_partitions(0) == [Partition()]
    assert enumerate_partitions(5, max_length=2) == [
        Partition([5]), Partition([4, 1]), Partition([3, 2])]


def test_partition_global_order_is_reverse_lexicographic():
    lams = enumerate_partitions(6)
    assert lams == sorted(lams, key=lambda p: p.sort_key())
    assert lams[0] == Partition([6])
    assert lams[-1] == Partition([1] * 6)


def test_ssyt_examples():
    assert len(enumerate_ssyt(Partition([2]), 2)) == 3
    assert len(enumerate_ssyt(Partition([1, 1]), 2)) == 1
    assert len(enumerate_ssyt(Partition([2, 1]), 2)) == 2
    only = enumerate_ssyt(Partition([1, 1]), 2)[0]
    assert only.rows == ((1,), (2,))
    assert only.weight(2) == (1, 1)


def test_ssyt_counts_match_binomials():
    for n in range(1, 6):
        for k in range(1, 6):
            column = Partition([1] * k)
            row = Partition([k])
            assert len(enumerate_ssyt(column, n)) == math.comb(n, k)
            assert len(enumerate_ssyt(row, n)) == math.comb(n + k - 1, k)


def test_ssyt_validation():
    with pytest.raises(ValueError):
        SemistandardTableau([(2, 1)])  # row decreasing
    with pytest.raises(ValueError):
        SemistandardTableau([(1, 1), (1,)])  # column not strict


def test_hook_contains():
    # every part after the n-th must be <= m
    assert hook_contains(Partition([1, 1, 1]), 1, 3)
    assert hook_contains(Partition([5]), 1, 0)
    assert not hook_contains(Partition([2, 2]), 1, 1)
    assert hook_contains(Partition([4, 1, 1]), 1, 1)
    assert hook_contains(Partition(), 0, 0)
    assert not hook_contains(Partition([1]), 0, 0)


def test_partition_json():
    assert Partition([3, 1]).to_json() == [3, 1]
    assert Partition(Partition([3, 1]).to_json()) == Partition([3, 1])
