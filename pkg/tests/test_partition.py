import pytest

from src.errors import DoesNotFit, InvalidParam, NotGrassmannian
from src.partition import (
    Partition,
    border_path,
    corners,
    corners_same_antidiagonal,
    is_hook,
    is_single_rectangle,
    lambda_of,
    leq,
    partitions_in_rectangle,
    perm_of,
    transpose,
)
from src.weyl import Permutation, grassmannian_perms


def P(text: str) -> Permutation:
    return Permutation(tuple(int(c) for c in text))


def test_lambda_of_gr24():
    assert lambda_of(P("2413"), 2) == Partition((2, 1))
    assert lambda_of(P("3412"), 2) == Partition((2, 2))
    assert lambda_of(P("1234"), 2) == Partition()
    with pytest.raises(NotGrassmannian):
        lambda_of(P("2143"), 2)


def test_lambda_of_in_gr47():
    lam = lambda_of(P("2457136"), 4)
    assert lam == Partition((3, 2, 2, 1))
    assert corners(lam, 4, 7).corners == ((4, 1), (3, 2), (1, 3))


def test_perm_of_and_lambda_of_are_inverse_up_to_n8():
    for n in range(2, 9):
        for d in range(1, n):
            for lam in partitions_in_rectangle(d, n):
                assert lambda_of(perm_of(lam, d, n), d) == lam
            for w in grassmannian_perms(d, n):
                assert perm_of(lambda_of(w, d), d, n) == w


def test_perm_of_inverts_lambda_of():
    for d, n in [(2, 4), (2, 5), (3, 6)]:
        for lam in partitions_in_rectangle(d, n):
            assert lambda_of(perm_of(lam, d, n), d) == lam
    with pytest.raises(DoesNotFit):
        perm_of(Partition((3,)), 2, 4)


def test_partition_validation():
    assert Partition((2, 1, 0)).parts == (2, 1)
    with pytest.raises(InvalidParam):
        Partition((1, 2))


def test_hooks():
    assert is_hook(Partition((2, 1))) == (2, 1)
    assert is_hook(Partition((3,))) == (3, 0)
    assert is_hook(Partition((1, 1, 1))) == (1, 2)
    assert is_hook(Partition((2, 2))) is None
    assert is_hook(Partition()) is None


def test_border_path_of_empty_partition():
    assert border_path(Partition(), 2, 4) == [(2, 0), (1, 0), (0, 0), (0, 1), (0, 2)]


def test_corners():
    assert corners(Partition(), 2, 4).corners == ()
    assert corners(Partition((2, 2)), 2, 4).corners == ((2, 2),)
    assert corners(Partition((2, 1)), 2, 4).corners == ((2, 1), (1, 2))


def test_antidiagonal():
    assert corners_same_antidiagonal(Partition((2, 1)), 2, 4)
    assert not corners_same_antidiagonal(Partition((3, 1)), 2, 5)
    assert corners_same_antidiagonal(Partition((2, 2)), 2, 4)


def test_single_rectangle():
    assert is_single_rectangle(Partition((2, 2)))
    assert is_single_rectangle(Partition())
    assert not is_single_rectangle(Partition((2, 1)))


def test_transpose():
    assert transpose(Partition((3, 1))) == Partition((2, 1, 1))
    assert transpose(Partition((3, 2, 2, 1))) == Partition((4, 3, 1))
    assert transpose(Partition()) == Partition()


def test_transpose_is_an_involution_and_keeps_corner_count():
    for d, n in [(2, 4), (2, 5), (3, 6), (3, 7)]:
        for lam in partitions_in_rectangle(d, n):
            assert transpose(transpose(lam)) == lam
            assert len(corners(transpose(lam), n - d, n).corners) == len(corners(lam, d, n).corners)


def test_leq():
    assert leq(Partition((1,)), Partition((2, 1)))
    assert not leq(Partition((1, 1)), Partition((2,)))


def test_partitions_in_rectangle_order():
    got = [lam.parts for lam in partitions_in_rectangle(2, 4)]
    assert got == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
