"""Exact linear algebra: rank, nullspace, signatures, reduced bases."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exalg.linalg import (Mat, LinearSystem, ReducedBasis, invert,
                          ldlt_signature, nullspace, parse_rat, rank,
                          rat_str, scale_to_ints)

F = Fraction


def test_rat_str_round_trip():
    for x in (F(0), F(3), F(-7, 2), F(22, 7)):
        assert parse_rat(rat_str(x)) == x


def test_scale_to_ints():
    ints, den = scale_to_ints([F(1, 2), F(-2, 3), F(0)])
    assert ints == [3, -4, 0] and den == 6


def test_mat_basics():
    m = Mat([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m.trace() == 5
    assert (m * Mat.identity(2)) == m
    assert m.transpose() == Mat([[1, 3], [2, 4]])
    assert m.apply([1, 0]) == [F(1), F(3)]
    assert (m - m).is_zero()


def test_rank_and_nullspace_known():
    rows = [{0: F(1), 1: F(2)}, {0: F(2), 1: F(4)}]
    assert rank(rows, 3) == 1
    ns = nullspace(rows, 3)
    # kernel of (x + 2y = 0) in 3 unknowns is 2-dimensional
    assert len(ns) == 2
    for v in ns:
        assert v[0] + 2 * v[1] == 0


def test_linear_system_solve_consistency():
    sys_ = LinearSystem(4)
    sys_.add_row({0: F(1), 1: F(-1)})
    sys_.add_row({2: F(1), 3: F(1)})
    assert sys_.rank() == 2
    basis = sys_.nullspace()
    assert len(basis) == 2
    for v in basis:
        assert v[0] == v[1] and v[2] == -v[3]


def test_invert_known():
    m = Mat([[2, 1], [1, 1]])
    inv = invert(m)
    assert m * inv == Mat.identity(2)


def test_invert_singular_raises():
    with pytest.raises(ValueError):
        invert(Mat([[1, 2], [2, 4]]))


def test_ldlt_signature_known():
    assert ldlt_signature(Mat([[1, 0], [0, -1]])) == (1, 1, 0)
    assert ldlt_signature(Mat([[0, 0], [0, 0]])) == (0, 0, 2)
    # needs a pivot swap: zero diagonal but nonzero form
    assert ldlt_signature(Mat([[0, 1], [1, 0]])) == (1, 1, 0)
    assert ldlt_signature(Mat.identity(5)) == (5, 0, 0)


def test_reduced_basis_coords():
    rb = ReducedBasis([[F(1), F(1), F(0)], [F(0), F(1), F(1)]])
    c = rb.coords([F(2), F(3), F(1)])
    assert list(c) == [F(2), F(1)]
    assert rb.coords([F(0), F(0), F(1)]) is None
    with pytest.raises(ValueError):
        ReducedBasis([[F(1), F(1)], [F(2), F(2)]])


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rank_transpose_invariant(rows):
    m = [{j: F(x) for j, x in enumerate(r) if x} for r in rows]
    t = [{i: F(r[j]) for i, r in enumerate(rows) if r[j]} for j in range(3)]
    assert rank(m, 3) == rank(t, len(rows))


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=2, max_size=6))
@settings(max_examples=60, deadline=None)
def test_nullspace_annihilates(rows):
    m = [{j: F(x) for j, x in enumerate(r) if x} for r in rows]
    for v in nullspace(m, 4):
        for r in rows:
            assert sum(F(x) * c for x, c in zip(r, v)) == 0
    assert rank(m, 4) + len(nullspace(m, 4)) == 4


@given(st.lists(st.integers(-6, 6), min_size=9, max_size=9))
@settings(max_examples=40, deadline=None)
def test_signature_of_congruent_forms(vals):
    a = Mat([[vals[3 * i + j] for j in range(3)] for i in range(3)])
    sym = a + a.transpose()
    # congruence by a fixed unimodular matrix preserves the signature
    u = Mat([[1, 1, 0], [0, 1, 2], [0, 0, 1]])
    assert ldlt_signature(u.transpose() * sym * u) == ldlt_signature(sym)
