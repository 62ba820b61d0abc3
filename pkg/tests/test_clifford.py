"""Clifford algebras Cliff(n) on a negative-definite form, blade basis."""

from fractions import Fraction

from exalg.cayley_dickson import (
    canonical_octonions,
    complex_algebra,
    quaternions,
    tower_octonions,
)
from exalg.clifford import (
    blade_product,
    blade_sign,
    blade_sign_naive,
    center_dim,
    clifford,
    even_subalgebra,
    pinor_rep_check,
    reversal_sign,
)

# center dimensions of Cliff(0)..Cliff(8), frozen from center_dim
CENTERS = [1, 2, 1, 2, 1, 2, 1, 2, 1]


def test_blade_sign_matches_naive_oracle():
    for a in range(64):
        for b in range(64):
            assert blade_sign(a, b) == blade_sign_naive(a, b), (a, b)


def test_blade_product_basics():
    # e_i e_i = -1, e_i e_j = -e_j e_i for i != j
    for i in range(6):
        assert blade_product(1 << i, 1 << i) == (-1, 0)
        for j in range(6):
            if i != j:
                s1, m1 = blade_product(1 << i, 1 << j)
                s2, m2 = blade_product(1 << j, 1 << i)
                assert m1 == m2 == (1 << i) | (1 << j)
                assert s1 == -s2


def test_reversal_sign_period():
    # reversal flips sign exactly on grades 2 and 3 mod 4
    for k in range(9):
        mask = (1 << k) - 1
        expected = -1 if k % 4 in (2, 3) else 1
        assert reversal_sign(mask) == expected


def test_clifford_dimensions_and_unit():
    for n in range(9):
        a = clifford(n)
        assert a.dim == 2 ** n
        assert a.mult[(0, 0)] == {0: Fraction(1)}


def test_clifford_associative_by_construction():
    # StarAlgebra validation (check=True for n <= 8) already enforces the
    # unit and star laws; associativity of blade_product on triples:
    for n in (3, 4):
        dim = 1 << n
        for a in range(dim):
            for b in range(dim):
                sab, mab = blade_product(a, b)
                for c in range(dim):
                    sbc, mbc = blade_product(b, c)
                    s1, m1 = blade_product(mab, c)
                    s2, m2 = blade_product(a, mbc)
                    assert (sab * s1, m1) == (sbc * s2, m2)


def test_center_dimensions():
    for n, expected in enumerate(CENTERS):
        assert center_dim(clifford(n)) == expected, n


def test_clifford_one_is_complex_numbers():
    c1 = clifford(1)
    c = complex_algebra()
    assert c1.dim == c.dim == 2
    for key in c.mult:
        assert c1.mult.get(key, {}) == c.mult[key]


def test_clifford_two_is_quaternions_up_to_sign():
    # identification (1, e1, e2, e12) -> (1, i, j, -k); the doubling
    # convention gives i j = -k in the tower quaternions
    c2 = clifford(2)
    h = quaternions()
    signs = [1, 1, 1, -1]
    for a in range(4):
        for b in range(4):
            (m, s), = c2.mult[(a, b)].items()
            lhs = {m: s * signs[a] * signs[b] * signs[m]}
            assert lhs == dict(h.mult[(a, b)]), (a, b)


def test_even_subalgebra_tower():
    for n in range(1, 9):
        sub, images = even_subalgebra(n)
        assert sub.dim == 2 ** (n - 1)
        assert len(images) == 2 ** (n - 1)
        # images are (sign, mask) pairs covering all even masks once
        masks = sorted(m for _, m in images)
        assert masks == sorted(
            m for m in range(1 << n) if m.bit_count() % 2 == 0)


def test_even_subalgebra_low_cases():
    # Cliff0(1) = R, Cliff0(2) = C, Cliff0(3) = H: check by center and dim
    sub1, _ = even_subalgebra(1)
    assert sub1.dim == 1
    sub2, _ = even_subalgebra(2)
    assert sub2.dim == 2 and center_dim(sub2) == 2
    sub3, _ = even_subalgebra(3)
    assert sub3.dim == 4 and center_dim(sub3) == 1


def test_pinor_representations():
    for a in (clifford(0), complex_algebra(), quaternions(),
              canonical_octonions(), tower_octonions()):
        assert pinor_rep_check(a), a.name


def test_clifford_rejects_huge_n():
    try:
        clifford(11)
        assert False, "n > 10 must be rejected"
    except ValueError:
        pass
