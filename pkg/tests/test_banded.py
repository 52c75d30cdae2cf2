from fractions import Fraction

import pytest

from minusone.banded import BandedMatrix, anticommutator, commutator, lower_bidiagonal, upper_bidiagonal
from minusone.oracle import dense_product

F = Fraction


def shift_down(n):
    return BandedMatrix(n, {-1: [F(1)] * (n - 1)})


def shift_up(n):
    return BandedMatrix(n, {1: [F(1)] * (n - 1)})


def test_storage_and_access():
    m = BandedMatrix.from_rows([[1, 2, 0], [3, 4, 5], [0, 6, 7]])
    assert (m.lower, m.upper) == (1, 1)
    assert m[1, 2] == 5 and m[2, 0] == 0
    assert m.diagonal(-1) == [3, 6]
    assert m.rows(2) == [[1, 2], [3, 4]]
    with pytest.raises(IndexError):
        m[3, 0]


def test_diagonal_length_checked():
    with pytest.raises(ValueError):
        BandedMatrix(3, {0: [1, 2]})


def test_identity_product():
    a = BandedMatrix.from_rows([[1, F(1, 2), 0], [3, 4, 5], [0, 6, 7]])
    assert a @ BandedMatrix.identity(3) == a
    assert dense_product(a, BandedMatrix.identity(3)) == a


def test_window_of_products():
    # F S = I everywhere but the last diagonal entry, which truncation drops.
    n = 6
    fs = shift_up(n) @ shift_down(n)
    assert fs.exact == n - 1
    assert fs.scalar_value() == 1
    sf = shift_down(n) @ shift_up(n)
    assert sf.exact == n
    diff = fs - sf
    assert [(i, j) for i in range(n - 1) for j in range(n - 1) if diff[i, j] != 0] == [(0, 0)]


def test_scaled_shifted_neg():
    a = BandedMatrix.diag([1, 2, 3])
    assert a.shifted(1) == BandedMatrix.diag([2, 3, 4])
    assert -a == a.scaled(-1)
    assert (a - a).scalar_value() == 0


def test_truncate_keeps_leading_block():
    a = BandedMatrix.from_rows([[1, 2, 0], [3, 4, 5], [0, 6, 7]])
    assert a.truncate(2).rows() == [[1, 2], [3, 4]]


def test_bidiagonal_helpers_and_commutators():
    lo = lower_bidiagonal([1, 2, 3], [4, 5])
    up = upper_bidiagonal([1, 1, 1], [1, 1])
    assert anticommutator(lo, up) == lo @ up + up @ lo
    assert commutator(lo, lo).scalar_value() == 0


def test_agrees_with_window():
    a = BandedMatrix.diag([1, 2, 3])
    b = BandedMatrix.diag([1, 2, 4])
    assert not a.agrees_with(b)
    assert a.agrees_with(b, 2)
