from fractions import Fraction

import pytest

from taurigid import linalg


def test_rank_and_nullspace():
    m = linalg.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(m) == 2
    ns = linalg.nullspace(m)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_nullspace_zero_rows():
    assert len(linalg.nullspace([], cols=3)) == 3
    with pytest.raises(ValueError):
        linalg.nullspace([])


def test_solve_exact():
    a = linalg.from_rows([[2, 0], [1, 1]])
    b = linalg.from_rows([[1], [1]])
    x = linalg.solve(a, b)
    assert x == [[Fraction(1, 2)], [Fraction(1, 2)]]
    assert linalg.matmul(a, x) == b


def test_solve_inconsistent():
    a = linalg.from_rows([[1, 1], [1, 1]])
    b = linalg.from_rows([[1], [2]])
    with pytest.raises(ValueError):
        linalg.solve(a, b)


def test_invertibility():
    assert linalg.is_invertible(linalg.identity(3))
    assert not linalg.is_invertible(linalg.from_rows([[1, 2], [2, 4]]))
    assert not linalg.is_invertible(linalg.from_rows([[1, 2, 3]]))


def test_rationals_stay_exact():
    third = Fraction(1, 3)
    m = [[third, third], [third, third * 2]]
    assert linalg.rank(m) == 2
    x = linalg.solve(m, linalg.identity(2))
    assert linalg.matmul(m, x) == linalg.identity(2)
