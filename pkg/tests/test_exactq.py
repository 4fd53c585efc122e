#!/usr/bin/env python

"""Tests for `recfan.exactq`."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from recfan.errors import InputError
from recfan.exactq import (
    QMatrix,
    dot,
    integer_vector,
    kernel_basis,
    parse_rational,
    rank,
    rational_to_str,
    rref,
    sign_normalized,
    solve,
)

rationals = st.fractions(max_denominator=50)


def _times(m: QMatrix, x):
    return tuple(dot(row, x) for row in m.rows)


def test_parse_and_format():
    """
    Testing rational parsing and the "p/q" format
    """
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(" 4 ") == 4
    assert parse_rational(7) == 7
    assert rational_to_str(Fraction(6, -4)) == "-3/2"
    assert rational_to_str(Fraction(8, 4)) == "2"
    with pytest.raises(InputError):
        parse_rational(0.5)
    with pytest.raises(InputError):
        parse_rational("1/0")
    with pytest.raises(InputError):
        parse_rational(True)


@given(rationals, rationals)
def test_rational_arithmetic_is_canonical(a, b):
    """
    Sums undo exactly and inverses multiply back to one
    """
    assert (a + b) - b == a
    if a != 0:
        assert a * (1 / a) == 1
    assert Fraction(str(a)) == a
    assert (a.denominator > 0) and Fraction(a.numerator, a.denominator) == a


def test_rref():
    """
    Testing reduced row-echelon form
    """
    reduced, pivots = rref(QMatrix.of([[2, 4], [1, 2]]))
    assert reduced.rows == ((1, 2), (0, 0))
    assert pivots == [0]

    identity = QMatrix.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    reduced, pivots = rref(identity)
    assert reduced.rows == identity.rows
    assert pivots == [0, 1, 2]

    # determinant 1/10 - 1/12 != 0
    m = QMatrix.of([["1/2", "1/3"], ["1/4", "1/5"]])
    reduced, pivots = rref(m)
    assert reduced.rows == ((1, 0), (0, 1))
    assert pivots == [0, 1]


def test_solve():
    """
    Testing exact solutions and inconsistent systems
    """
    identity = QMatrix.of([[1, 0], [0, 1]])
    assert solve(identity, [3, "1/2"]) == (3, Fraction(1, 2))

    m = QMatrix.of([[1, 1]])
    x = solve(m, [2])
    assert _times(m, x) == (2,)

    assert solve(QMatrix.of([[1, 0], [1, 0]]), [0, 1]) is None

    with pytest.raises(InputError):
        solve(identity, [1])


def test_kernel_and_rank():
    """
    Testing kernel bases and rank
    """
    assert len(kernel_basis(QMatrix.of([[0, 0]]))) == 2
    assert kernel_basis(QMatrix.of([[1, 0], [0, 1]])) == []

    m = QMatrix.of([[1, 1, 0]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    assert all(_times(m, v) == (0,) for v in basis)
    assert rank(QMatrix.of(basis, 3)) == 2

    assert rank(QMatrix.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(QMatrix.of([[0, 0], [0, 0]])) == 0
    assert rank(QMatrix.of([[1, 2], [2, 4], [3, 6]])) == 1


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_kernel_identity(rows):
    """
    rank + kernel dimension = number of columns, and rank = number of pivots
    """
    m = QMatrix.of(rows, 3)
    _, pivots = rref(m)
    basis = kernel_basis(m)
    assert rank(m) == len(pivots)
    assert rank(m) + len(basis) == 3
    for v in basis:
        assert all(x == 0 for x in _times(m, v))


def test_integer_scaling():
    """
    Testing primitive integer scaling of vectors
    """
    assert integer_vector([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert integer_vector([0, 0]) == (0, 0)
    assert integer_vector([-4, 6]) == (-2, 3)
    assert sign_normalized([-4, 6]) == (2, -3)
    assert sign_normalized([0, "-1/2"]) == (0, 1)


def test_matrix_shape_is_checked():
    """
    Testing ragged matrices are refused
    """
    with pytest.raises(InputError):
        QMatrix.of([[1, 2], [3]])
    with pytest.raises(InputError):
        QMatrix.of([])
