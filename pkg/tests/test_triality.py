"""Normed trialities t(x,y,z) = Re((xy)z) and algebra reconstruction."""

import random
from fractions import Fraction

from exalg.cayley_dickson import (
    canonical_octonions,
    complex_algebra,
    quaternions,
    real_algebra,
)
from exalg.triality import (
    Triality,
    algebra_from_triality,
    check_nondegenerate,
    check_normed,
    quaternion_match,
    random_unit_vector,
    reconstruction_matches,
    table_multiply,
    triality_from_algebra,
    two_sided_unit_ok,
)

ALGEBRAS = [real_algebra, complex_algebra, quaternions, canonical_octonions]


def _unit(d, i, s=1):
    v = [Fraction(0)] * d
    v[i] = Fraction(s)
    return v


def test_tensor_dims():
    for mk in ALGEBRAS:
        a = mk()
        t = triality_from_algebra(a)
        assert t.dims == (a.dim, a.dim, a.dim)


def test_tensor_values_match_algebra():
    o = canonical_octonions()
    t = triality_from_algebra(o)
    bs = o.basis_elements()
    for i in (0, 1, 5):
        for j in (0, 2, 7):
            for k in (0, 3, 6):
                assert t.value(_unit(8, i), _unit(8, j), _unit(8, k)) == \
                    ((bs[i] * bs[j]) * bs[k]).re()


def test_duals_are_adjoint():
    t = triality_from_algebra(quaternions())
    rng = random.Random(1)
    for _ in range(20):
        x = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        y = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        z = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        val = t.value(x, y, z)
        assert sum(a * b for a, b in zip(t.dual1(y, z), x)) == val
        assert sum(a * b for a, b in zip(t.dual2(x, z), y)) == val
        assert sum(a * b for a, b in zip(t.dual3(x, y), z)) == val


def test_nondegenerate():
    for mk in ALGEBRAS:
        assert check_nondegenerate(triality_from_algebra(mk()))


def test_degenerate_tensor_detected():
    zero = Triality([[[0, 0], [0, 0]], [[0, 0], [0, 0]]])
    assert not check_nondegenerate(zero)


def test_normed_with_exact_attainment():
    rep = check_normed(triality_from_algebra(quaternions()),
                       samples=200, seed=42)
    assert rep["pass"]
    assert rep["witness"] is None
    rep8 = check_normed(triality_from_algebra(canonical_octonions()),
                        samples=50, seed=42)
    assert rep8["pass"]


def test_normed_fails_off_division_tensor():
    # doubling one entry of the quaternion tensor breaks exact attainment
    t = triality_from_algebra(quaternions())
    t.tensor[1][2][3] *= 2
    rep = check_normed(t, samples=200, seed=42)
    assert not rep["pass"]
    assert rep["witness"] is not None


def test_reconstruction_round_trip():
    for mk in ALGEBRAS:
        assert reconstruction_matches(mk()), mk().name


def test_reconstructed_unit_is_two_sided():
    t4 = triality_from_algebra(quaternions())
    t8 = triality_from_algebra(canonical_octonions())
    rng = random.Random(3)
    for t, d in ((t4, 4), (t8, 8)):
        for _ in range(3):
            u2 = random_unit_vector(rng, d)
            u3 = random_unit_vector(rng, d)
            assert sum(c * c for c in u2) == 1
            assert sum(c * c for c in u3) == 1
            assert two_sided_unit_ok(t, u2, u3)


def test_reconstruction_rejects_non_unit():
    t = triality_from_algebra(quaternions())
    try:
        algebra_from_triality(t, [Fraction(2), 0, 0, 0], _unit(4, 0))
        assert False, "non-unit u2 must be rejected"
    except ValueError:
        pass


def test_table_multiply_agrees_with_algebra():
    h = quaternions()
    rng = random.Random(5)
    for _ in range(20):
        x = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        y = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        prod = h.element(x) * h.element(y)
        assert table_multiply(h.mult, x, y) == list(prod.coords)


def test_every_basis_unit_reconstruction_is_quaternions():
    # all sixteen basis-pair unit choices give tables isomorphic to H
    t = triality_from_algebra(quaternions())
    h = quaternions()
    for i2 in range(4):
        for i3 in range(4):
            mult, unit = algebra_from_triality(t, _unit(4, i2), _unit(4, i3))
            assert two_sided_unit_ok(t, _unit(4, i2), _unit(4, i3))
            images = quaternion_match(mult, unit, h)
            assert images is not None, (i2, i3)
