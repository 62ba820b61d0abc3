"""Cayley-Dickson doubling: the R, C, H, O, S ladder and its property flags."""

import random
from fractions import Fraction

from exalg.algebras import inner
from exalg.cayley_dickson import (
    FANO_LINES,
    alternative_witness,
    basic_triple_iso,
    canonical_octonions,
    cd_double,
    cd_tower,
    check_cd_propositions,
    check_fano_lines,
    check_index_cycling,
    check_index_doubling,
    find_zero_divisor,
    is_alternative,
    is_associative,
    is_commutative,
    is_nicely_normed,
    is_real,
    octonion_product_index,
    sedenions,
    tower_octonions,
)

# property flags per doubling level, frozen from an exhaustive basis scan
LADDER = [
    {"real": True, "commutative": True, "associative": True,
     "alternative": True, "nicely_normed": True},        # dim 1
    {"real": False, "commutative": True, "associative": True,
     "alternative": True, "nicely_normed": True},        # dim 2
    {"real": False, "commutative": False, "associative": True,
     "alternative": True, "nicely_normed": True},        # dim 4
    {"real": False, "commutative": False, "associative": False,
     "alternative": True, "nicely_normed": True},        # dim 8
    {"real": False, "commutative": False, "associative": False,
     "alternative": False, "nicely_normed": True},       # dim 16
]


def test_ladder_flags():
    for level, expected in enumerate(LADDER):
        a = cd_tower(level)
        assert a.dim == 2 ** level
        assert check_cd_propositions(a) == expected


def test_flags_match_predicates():
    s = sedenions()
    assert is_real(cd_tower(0))
    assert not is_real(cd_tower(1))
    assert is_commutative(cd_tower(1))
    assert not is_commutative(cd_tower(2))
    assert is_associative(cd_tower(2))
    assert not is_associative(cd_tower(3))
    assert is_alternative(cd_tower(3))
    assert not is_alternative(s)
    assert is_nicely_normed(s)


def test_doubling_dimensions_and_adjoined_unit():
    # (a,b)(c,d) = (ac - d b*, a* d + c b); the adjoined unit is e_n
    for level in range(4):
        a = cd_tower(level)
        d = cd_double(a)
        assert d.dim == 2 * a.dim
        n = a.dim
        assert dict(d.mult[(n, n)]) == {0: Fraction(-1)}
    s = sedenions()
    assert dict(s.mult[(1, 8)]) == {9: Fraction(-1)}
    assert dict(s.mult[(8, 1)]) == {9: Fraction(1)}


def test_tower_level_five_flags():
    a = cd_tower(5)
    assert a.dim == 32
    assert check_cd_propositions(a) == {
        "real": False, "commutative": False, "associative": False,
        "alternative": False, "nicely_normed": True,
    }


def test_canonical_octonion_fano_lines():
    assert check_fano_lines()
    assert check_index_cycling()
    assert check_index_doubling()
    assert len(FANO_LINES) == 7
    o = canonical_octonions()
    # every line (i, j, k) means e_i e_j = e_k, cyclically and signed
    for i, j, k in FANO_LINES:
        assert dict(o.mult[(i, j)]) == {k: Fraction(1)}
        assert dict(o.mult[(j, k)]) == {i: Fraction(1)}
        assert dict(o.mult[(k, i)]) == {j: Fraction(1)}
        assert dict(o.mult[(j, i)]) == {k: Fraction(-1)}
        assert octonion_product_index(i, j) == (1, k)


def test_fano_index_cycling_and_doubling():
    # the line set is closed under i -> 2i mod 7 and i -> i+1 mod 7
    lines = {frozenset(l) for l in FANO_LINES}
    def norm(i):
        return ((i - 1) % 7) + 1
    for l in lines:
        assert frozenset(norm(2 * i) for i in l) in lines
        assert frozenset(norm(i + 1) for i in l) in lines


def test_tower_octonions_isomorphic_to_canonical():
    # (e1, e2, e4) is a basic triple of the doubled tower; the induced map
    # verifies all 64 products internally and raises if any disagrees
    t = tower_octonions()
    images = basic_triple_iso(t, t.basis(1), t.basis(2), t.basis(4))
    signed = []
    for x in images:
        terms = [(i, c) for i, c in enumerate(x.coords) if c]
        assert len(terms) == 1
        signed.append((terms[0][1], terms[0][0]))
    assert signed == [(1, 0), (1, 1), (1, 2), (1, 4),
                      (-1, 3), (-1, 6), (-1, 7), (-1, 5)]


def test_basic_triple_rejects_bad_input():
    t = tower_octonions()
    try:
        basic_triple_iso(t, t.basis(1), t.basis(2), t.basis(3))
        assert False, "f3 in the span of f1 f2 must be rejected"
    except ValueError:
        pass
    try:
        basic_triple_iso(t, 2 * t.basis(1), t.basis(2), t.basis(4))
        assert False, "non-unit triple element must be rejected"
    except ValueError:
        pass


def test_octonions_have_no_zero_divisors():
    assert find_zero_divisor(tower_octonions()) is None
    assert find_zero_divisor(canonical_octonions()) is None


def test_sedenion_zero_divisor_witness():
    x, y = find_zero_divisor(sedenions())
    assert (x * y).is_zero()
    assert not x.is_zero() and not y.is_zero()
    # deterministic scan lands on (e1 + e10)(e4 - e15) = 0
    assert [(i, c) for i, c in enumerate(x.coords) if c] == \
        [(1, Fraction(1)), (10, Fraction(1))]
    assert [(i, c) for i, c in enumerate(y.coords) if c] == \
        [(4, Fraction(1)), (15, Fraction(-1))]
    assert x.norm_sq() != 0 and y.norm_sq() != 0


def test_alternative_witness():
    assert alternative_witness(tower_octonions()) is None
    assert alternative_witness(canonical_octonions()) is None
    w = alternative_witness(sedenions())
    assert w == (1, 2, 12)
    s = sedenions()
    x = s.basis(w[0]) + s.basis(w[2])
    b = s.basis(w[1])
    # the associator [x, x, b] with a repeated argument fails to vanish
    assoc = (x * x) * b - x * (x * b)
    assert not assoc.is_zero()


def test_norm_multiplicativity_seeded():
    rng = random.Random(42)
    for level in range(4):
        a = cd_tower(level)
        for _ in range(50):
            x = a.element([Fraction(rng.randint(-9, 9)) for _ in range(a.dim)])
            y = a.element([Fraction(rng.randint(-9, 9)) for _ in range(a.dim)])
            assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()


def test_sedenions_fail_norm_multiplicativity():
    s = sedenions()
    x, y = find_zero_divisor(s)
    # a zero divisor pair breaks |xy|^2 = |x|^2 |y|^2 outright
    assert (x * y).norm_sq() == 0
    assert x.norm_sq() * y.norm_sq() != 0


def test_conjugation_in_doubled_algebra():
    # (a, b)* = (a*, -b): every non-unit basis element negates
    s = sedenions()
    for i in range(16):
        st = s.basis(i).conjugate()
        expected = s.basis(i) if i == 0 else -s.basis(i)
        assert st == expected


def test_inner_product_orthonormal_all_levels():
    for level in range(5):
        a = cd_tower(level)
        for i in range(a.dim):
            for j in range(a.dim):
                assert inner(a.basis(i), a.basis(j)) == (1 if i == j else 0)
