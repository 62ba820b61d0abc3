"""Star-algebra tables: construction checks, element arithmetic, forms."""

from fractions import Fraction

import pytest

from exalg.algebras import StarAlgebra, associator, commutator, inner
from exalg.cayley_dickson import (canonical_octonions, complex_algebra,
                                  quaternions)

F = Fraction


def test_unit_law_enforced():
    mult = {(0, 0): {0: F(1)}, (0, 1): {1: F(1)},
            (1, 0): {1: F(1)}, (1, 1): {0: F(-1)}}
    star = [[1, 0], [0, -1]]
    StarAlgebra("ok", 2, mult, star)
    bad = dict(mult)
    bad[(0, 1)] = {1: F(2)}  # unit must act as identity
    with pytest.raises(ValueError):
        StarAlgebra("bad", 2, bad, star)


def test_star_involution_enforced():
    mult = {(0, 0): {0: F(1)}, (0, 1): {1: F(1)},
            (1, 0): {1: F(1)}, (1, 1): {0: F(-1)}}
    with pytest.raises(ValueError):
        StarAlgebra("bad", 2, mult, [[1, 1], [0, -1]])


def test_star_antiautomorphism_enforced():
    # star fixing everything is not an anti-automorphism of H
    h = quaternions()
    with pytest.raises(ValueError):
        StarAlgebra("bad", 4, h.mult, [[1 if i == j else 0 for j in range(4)]
                                       for i in range(4)])


def test_element_arithmetic():
    c = complex_algebra()
    i = c.basis(1)
    one = c.one()
    assert i * i == -one
    assert (one + i) * (one - i) == c.scalar(2)
    assert (one + i) / 2 + (one + i) / 2 == one + i
    assert -(one - i) == i - one
    x = 3 * i
    assert x.norm_sq() == 9


def test_conjugation_reverses_products():
    o = canonical_octonions()
    bs = o.basis_elements()
    for a in bs:
        for b in bs:
            assert (a * b).conjugate() == b.conjugate() * a.conjugate()


def test_re_im_split():
    h = quaternions()
    x = h.element([3, 1, 2, 0])
    assert x.re() == 3
    assert x.im() == h.element([0, 1, 2, 0])
    assert x.conjugate() == h.element([3, -1, -2, 0])
    assert not x.scalar_part_only()
    assert h.scalar(5).scalar_part_only()


def test_norm_positive_definite():
    o = canonical_octonions()
    x = o.element([1, -2, 3, 0, 0, 5, 0, 7])
    assert x.norm_sq() == 1 + 4 + 9 + 25 + 49
    assert o.zero().norm_sq() == 0


def test_inverse():
    h = quaternions()
    x = h.element([1, 2, -1, 3])
    assert x * x.inverse() == h.one()
    assert x.inverse() * x == h.one()
    with pytest.raises(ZeroDivisionError):
        h.zero().inverse()


def test_inner_is_symmetric_orthonormal():
    o = canonical_octonions()
    bs = o.basis_elements()
    for i, a in enumerate(bs):
        for j, b in enumerate(bs):
            assert inner(a, b) == (1 if i == j else 0)
            assert inner(a, b) == inner(b, a)


def test_commutator_and_associator():
    h = quaternions()
    i, j = h.basis(1), h.basis(2)
    assert commutator(i, j) == i * j - j * i
    assert associator(i, j, i * j).is_zero()  # H is associative
    o = canonical_octonions()
    a, b, c = o.basis(1), o.basis(2), o.basis(3)
    assert not associator(a, b, c).is_zero()  # O is not


def test_json_round_trip():
    h = quaternions()
    d = h.to_json_dict()
    back = StarAlgebra.from_json_dict(d)
    assert back.table_equal(h)
