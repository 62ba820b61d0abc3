"""Hermitian 3x3 Jordan algebras, the cubic form, and the projective plane."""

import random
from fractions import Fraction

from exalg.cayley_dickson import (
    canonical_octonions,
    complex_algebra,
    quaternions,
    real_algebra,
)
from exalg.jordan import (
    JordanElement,
    ProjectivePoint,
    collinear,
    conjugate_by_signed_perm,
    cross,
    det2,
    det3,
    det_preserving_liealg,
    diag,
    from_jordan_coords,
    h2_iso,
    h2_iso_check,
    hopf,
    hopf_left,
    incident,
    jordan_basis,
    jordan_coords,
    jordan_dim,
    jordan_identity_element,
    jordan_product,
    l_operator_matrix,
    line_through,
    minkowski,
    point_from_vector,
    polarize_det,
    random_jordan_element,
    random_point,
    signed_perm_conjugations,
    spin_product,
    trace3,
)
from exalg.liealg import jacobi_check, killing_signature

DIVISION = [real_algebra, complex_algebra, quaternions, canonical_octonions]


def test_jordan_dims():
    # dim h_3(K) = 3 + 3 dim K
    for mk, expected in zip(DIVISION, (6, 9, 15, 27)):
        a = mk()
        assert jordan_dim(a, 3) == expected
        assert len(jordan_basis(a, 3)) == expected
    assert jordan_dim(canonical_octonions(), 2) == 10


def test_hermitian_validation():
    o = canonical_octonions()
    e1 = o.basis(1)
    try:
        JordanElement(o, [[0, e1, 0], [e1, 0, 0], [0, 0, 0]])
        assert False, "non-hermitian matrix must be rejected"
    except ValueError:
        pass
    try:
        JordanElement(o, [[e1, 0, 0], [0, 0, 0], [0, 0, 0]])
        assert False, "non-real diagonal must be rejected"
    except ValueError:
        pass
    try:
        JordanElement(o, [[0, 0], [0, 0], [0, 0]])
        assert False, "non-square entries must be rejected"
    except ValueError:
        pass
    # a legitimate hermitian matrix passes
    JordanElement(o, [[1, e1, 0], [-e1, 2, 0], [0, 0, 3]])


def test_jordan_product_commutative_unital():
    rng = random.Random(42)
    for mk in DIVISION:
        a = mk()
        e = jordan_identity_element(a, 3)
        for _ in range(5):
            x = random_jordan_element(a, 3, rng, span=3, maxden=2)
            y = random_jordan_element(a, 3, rng, span=3, maxden=2)
            assert jordan_product(x, y) == jordan_product(y, x)
            assert jordan_product(e, x) == x


def test_jordan_identity_seeded():
    # (x o y) o (x o x) = x o (y o (x o x)) on seeded random pairs
    rng = random.Random(42)
    o = canonical_octonions()
    for _ in range(10):
        x = random_jordan_element(o, 3, rng, span=2, maxden=2)
        y = random_jordan_element(o, 3, rng, span=2, maxden=2)
        xx = jordan_product(x, x)
        lhs = jordan_product(jordan_product(x, y), xx)
        rhs = jordan_product(x, jordan_product(y, xx))
        assert lhs == rhs


def test_trace_via_l_operator():
    # tr(L_a) = 9 tr3(a) on h_3(O)
    o = canonical_octonions()
    rng = random.Random(7)
    for _ in range(5):
        a = random_jordan_element(o, 3, rng, span=3, maxden=2)
        La = l_operator_matrix(a)
        tr = sum(La.rows[i][i] for i in range(La.shape[0]))
        assert tr == 9 * trace3(a)


def test_det_on_diagonal():
    o = canonical_octonions()
    a = diag(o, [2, 3, 5])
    assert det3(a) == 30
    assert trace3(a) == 10
    assert det2(JordanElement(o, [[2, 0], [0, 7]])) == 14


def test_det_polarization():
    o = canonical_octonions()
    rng = random.Random(11)
    for _ in range(5):
        a = random_jordan_element(o, 3, rng, span=2, maxden=2)
        b = random_jordan_element(o, 3, rng, span=2, maxden=2)
        c = random_jordan_element(o, 3, rng, span=2, maxden=2)
        assert polarize_det(a, a, a) == det3(a)
        # full symmetry
        assert polarize_det(a, b, c) == polarize_det(b, a, c)
        assert polarize_det(a, b, c) == polarize_det(a, c, b)


def test_cross_is_dual_to_polarized_det():
    # tr((a x b) o c) = (a, b, c)
    o = canonical_octonions()
    rng = random.Random(13)
    a = random_jordan_element(o, 3, rng, span=2, maxden=1)
    b = random_jordan_element(o, 3, rng, span=2, maxden=1)
    for c in jordan_basis(o, 3)[:9]:
        assert jordan_product(cross(a, b), c).trace() == polarize_det(a, b, c)


def test_coords_round_trip():
    o = canonical_octonions()
    rng = random.Random(3)
    a = random_jordan_element(o, 3, rng, span=4, maxden=3)
    v = jordan_coords(a)
    assert from_jordan_coords(o, 3, v) == a


def test_projective_point_validation():
    o = canonical_octonions()
    p = ProjectivePoint(diag(o, [1, 0, 0]))
    assert p == ProjectivePoint(diag(o, [3, 0, 0]))  # scale-invariant equality
    try:
        ProjectivePoint(diag(o, [1, 1, 0]))
        assert False, "rank-2 projection is not a point"
    except ValueError:
        pass
    try:
        ProjectivePoint(diag(o, [0, 0, 0]))
        assert False, "zero is not a point"
    except ValueError:
        pass


def test_point_from_vector():
    o = canonical_octonions()
    p = point_from_vector(o.basis(1), o.basis(2), o.one())
    q = point_from_vector(2 * o.basis(1), 2 * o.basis(2), 2 * o.one())
    assert p == q  # homogeneous
    try:
        point_from_vector(o.basis(1), o.basis(2), o.basis(3))
        assert False, "nonassociating triple must be rejected"
    except ValueError:
        pass
    try:
        point_from_vector(o.zero(), o.zero(), o.zero())
        assert False, "zero vector must be rejected"
    except ValueError:
        pass


def test_incidence_geometry():
    o = canonical_octonions()
    p1 = ProjectivePoint(diag(o, [1, 0, 0]))
    p2 = ProjectivePoint(diag(o, [0, 1, 0]))
    p3 = ProjectivePoint(diag(o, [0, 0, 1]))
    assert incident(p1, p2)
    assert not incident(p1, p1)
    ell = line_through(p1, p2)
    assert incident(p1, ell) and incident(p2, ell)
    assert ell == p3  # [e11 x e22] is the coordinate line z = 0
    assert collinear(p1, p2, p3)
    rng = random.Random(5)
    r = random_point(o, rng)
    assert not collinear(p1, p2, r)


def test_collinear_iff_on_joining_line():
    o = canonical_octonions()
    rng = random.Random(9)
    p = random_point(o, rng, span=2)
    q = random_point(o, rng, span=2)
    r = random_point(o, rng, span=2)
    ell = line_through(p, q)
    assert collinear(p, q, r) == incident(r, ell)


def test_line_through_rejects_equal_points():
    o = canonical_octonions()
    p = ProjectivePoint(diag(o, [1, 0, 0]))
    try:
        line_through(p, ProjectivePoint(diag(o, [2, 0, 0])))
        assert False, "equal points span no line"
    except ValueError:
        pass


def test_hopf_projections():
    o = canonical_octonions()
    def el(*cs):
        v = [Fraction(c) for c in cs] + [Fraction(0)] * (8 - len(cs))
        return o.element(v)
    x = el(1, 2, 0, -1, 0, 0, 3, 0)
    y = el(0, 1, 1, 0, 0, -2, 0, 1)
    # both constructions verify projection, trace 1, det 0 internally
    p = hopf(x, y)
    q = hopf_left(x, y)
    assert p.trace() == 1 and q.trace() == 1
    # fiber constancy
    assert hopf(x, y) == hopf(x * y.inverse(), o.one())
    assert hopf_left(x, y) == hopf_left(y.inverse() * x, o.one())
    try:
        hopf(o.zero(), o.zero())
        assert False, "zero vector must be rejected"
    except ValueError:
        pass


def test_spin_factor_iso():
    for mk in DIVISION:
        assert h2_iso_check(mk()), mk().name


def test_minkowski_vs_det2():
    o = canonical_octonions()
    rng = random.Random(17)
    a = random_jordan_element(o, 2, rng, span=3, maxden=2)
    pa = h2_iso(a)
    assert det2(a) == -minkowski(pa, pa)
    # spin product: (v,a)(w,b) = (aw + bv, <v,w> + ab)
    b = random_jordan_element(o, 2, rng, span=3, maxden=2)
    assert h2_iso(jordan_product(a, b)) == spin_product(h2_iso(a), h2_iso(b))


def test_signed_perm_conjugations_preserve_structure():
    o = canonical_octonions()
    rng = random.Random(21)
    a = random_jordan_element(o, 3, rng, span=2, maxden=2)
    b = random_jordan_element(o, 3, rng, span=2, maxden=2)
    maps = signed_perm_conjugations()
    assert len(maps) == 48
    for perm, signs in maps[:8] + maps[-4:]:
        ga = conjugate_by_signed_perm(a, perm, signs)
        gb = conjugate_by_signed_perm(b, perm, signs)
        assert ga.trace() == a.trace()
        assert det3(ga) == det3(a)
        gab = conjugate_by_signed_perm(jordan_product(a, b), perm, signs)
        assert jordan_product(ga, gb) == gab


def test_det_preserving_small():
    # reduced structure algebras: sl(3,R) and sl(3,C) as real Lie algebras
    L = det_preserving_liealg(real_algebra(), 3)
    assert L.dim == 8
    assert jacobi_check(L)["pass"]
    assert killing_signature(L) == (5, 3, 0)
    Lc = det_preserving_liealg(complex_algebra(), 3)
    assert Lc.dim == 16
    assert jacobi_check(Lc)["pass"]
