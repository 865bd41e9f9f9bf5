import pytest

from symqva.partitions import (
    comparable,
    conjugate,
    dominance_leq,
    linear_extension,
    make_partition,
    partitions_of,
    z_of,
)


def test_counts():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_dominance():
    assert dominance_leq((2, 1, 1), (3, 1))
    assert not dominance_leq((3, 1), (2, 1, 1))
    assert not comparable((3, 1, 1, 1), (2, 2, 2))


def test_z():
    assert z_of((2, 1, 1)) == 4
    assert z_of((3, 3, 1)) == 18
    assert z_of(()) == 1


def test_make_partition_sorts_and_validates():
    assert make_partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        make_partition([2, 0])


@pytest.mark.parametrize("n", range(1, 9))
def test_linear_extension_respects_dominance(n):
    order = linear_extension(partitions_of(n))
    for i, lam in enumerate(order):
        for mu in order[:i]:
            assert not (dominance_leq(mu, lam) and mu != lam)


def test_conjugate_involution():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
    assert conjugate((3, 1)) == (2, 1, 1)
