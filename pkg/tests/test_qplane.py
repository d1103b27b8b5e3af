import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qm3 import linalg
from qm3.qplane import (
    MAT_ID,
    MAT_X,
    MAT_Y,
    MONOMIALS,
    UNIT,
    X,
    Y,
    PlaneElt,
    basis,
    change_of_basis,
    elementary,
    from_matrix,
    mat_mul,
    plane_mul,
    to_matrix,
)
from qm3.scalars import Q, Q2, CycNum

small = st.integers(-3, 3)
cycnums = st.builds(CycNum, small, small)
planes = st.lists(cycnums, min_size=9, max_size=9).map(PlaneElt)


def test_commutation_examples():
    assert Y * X == Q2 * (X * Y)
    assert X ** 2 * X == UNIT
    # oracle: explicit matrices
    assert to_matrix((X * Y) * (X * Y)) == mat_mul(mat_mul(MAT_X, MAT_Y), mat_mul(MAT_X, MAT_Y))
    assert (X * Y) * (X * Y) == Q2 * PlaneElt.monomial(2, 2)


def test_to_matrix_examples():
    assert to_matrix(X) == ((1, 0, 0), (0, Q2, 0), (0, 0, Q))
    assert to_matrix(UNIT) == MAT_ID
    assert to_matrix(X * Y) == mat_mul(MAT_X, MAT_Y)


def test_from_matrix_examples():
    assert from_matrix(MAT_ID) == UNIT
    z = PlaneElt.monomial(2, 1)
    assert from_matrix(to_matrix(z)) == z
    third = CycNum(Fraction(1, 3))
    e11 = third * (UNIT + X + X ** 2)
    assert from_matrix(elementary(0, 0)) == e11
    assert to_matrix(e11) == elementary(0, 0)


def test_relations_in_both_representations():
    assert X * Y == Q * (Y * X)
    assert X ** 3 == UNIT and Y ** 3 == UNIT
    assert mat_mul(MAT_X, MAT_Y) == tuple(tuple(Q * v for v in row) for row in mat_mul(MAT_Y, MAT_X))
    cube = mat_mul(MAT_X, mat_mul(MAT_X, MAT_X))
    assert cube == MAT_ID


def test_all_basis_pairs_match_matrix_product():
    for u, v in itertools.product(basis(), repeat=2):
        assert to_matrix(plane_mul(u, v)) == mat_mul(to_matrix(u), to_matrix(v))


def test_round_trips():
    for b in basis():
        assert from_matrix(to_matrix(b)) == b
    for i, j in itertools.product(range(3), repeat=2):
        assert to_matrix(from_matrix(elementary(i, j))) == elementary(i, j)


def test_monomials_independent():
    assert not linalg.det(change_of_basis()).is_zero()


@given(planes, planes)
def test_to_matrix_is_homomorphism(u, v):
    assert to_matrix(u * v) == mat_mul(to_matrix(u), to_matrix(v))


@given(planes, planes, planes)
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


def test_rendering():
    z = Q * X * Y + PlaneElt.monomial(0, 0, 2)
    assert z.text() == "(2)*1 + (w)*x*y"
    assert len(z.to_json()) == 9
    assert MONOMIALS[4] == (1, 1)
