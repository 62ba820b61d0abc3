"""The doubling tower R -> C -> H -> O -> sedenions -> ... and friends.

The doubled product is (a,b)(c,d) = (ac - d b*, a* d + c b) with
conjugation (a,b)* = (a*, -b).  Basis order in a doubled algebra: the
(x,0) block first, then the (0,x) block, so index dim(A) is the adjoined
imaginary unit.

The canonical octonions are a verbatim 8-dimensional table (basis
1, e1..e7) constructed independently of the tower; the two are reconciled
through basic_triple_iso, not by assuming identical labeling.
"""

from fractions import Fraction
from functools import cache

from .algebras import StarAlgebra, Element, inner, associator
from .linalg import Mat, ldlt_signature

_F1 = Fraction(1)

LEVEL_NAMES = {0: "R", 1: "C", 2: "H", 3: "O", 4: "sedenion", 5: "cd32"}


@cache
def real_algebra():
    return StarAlgebra("R", 1, {(0, 0): {0: 1}}, [[1]])


def cd_double(a, name=None):
    """One Cayley-Dickson doubling step."""
    n = a.dim
    if name is None:
        name = "cd(%s)" % a.name
    mult = {}

    def put(i, j, coords, block):
        row = {}
        for k, v in enumerate(coords):
            if v:
                row[k + block * n] = v
        if row:
            mult[(i, j)] = row

    basis = [[_F1 if t == s else Fraction(0) for t in range(n)]
             for s in range(n)]
    conj = [a.conj_coords(b) for b in basis]
    for i in range(n):
        for j in range(n):
            # (e_i,0)(e_j,0) = (e_i e_j, 0)
            put(i, j, a.mult_coords(basis[i], basis[j]), 0)
            # (e_i,0)(0,e_j) = (0, e_i* e_j)
            put(i, j + n, a.mult_coords(conj[i], basis[j]), 1)
            # (0,e_i)(e_j,0) = (0, e_j e_i)
            put(i + n, j, a.mult_coords(basis[j], basis[i]), 1)
            # (0,e_i)(0,e_j) = (-e_j e_i*, 0)
            prod = a.mult_coords(basis[j], conj[i])
            put(i + n, j + n, [-v for v in prod], 0)

    star = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for k, v in enumerate(conj[i]):
            star[k][i] = v
        star[i + n][i + n] = Fraction(-1)
    return StarAlgebra(name, 2 * n, mult, star, unit=a.unit)


@cache
def cd_tower(level):
    """The level-th algebra in the doubling tower (0 = R)."""
    if level == 0:
        return real_algebra()
    prev = cd_tower(level - 1)
    return cd_double(prev, name=LEVEL_NAMES.get(level, "cd%d" % (1 << level)))


def complex_algebra():
    return cd_tower(1)


def quaternions():
    return cd_tower(2)


def tower_octonions():
    return cd_tower(3)


def sedenions():
    return cd_tower(4)


# rows e1..e7 times columns e1..e7; (sign, index), index 0 means the unit
_OCT_TABLE = [
    [(-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
]


@cache
def canonical_octonions():
    """The canonical octonion table, basis 1, e1, ..., e7."""
    mult = {(0, 0): {0: 1}}
    for i in range(1, 8):
        mult[(0, i)] = {i: 1}
        mult[(i, 0)] = {i: 1}
    for i in range(1, 8):
        for j in range(1, 8):
            s, k = _OCT_TABLE[i - 1][j - 1]
            mult[(i, j)] = {k: s}
    star = [[0] * 8 for _ in range(8)]
    star[0][0] = 1
    for i in range(1, 8):
        star[i][i] = -1
    return StarAlgebra("O", 8, mult, star)


FANO_LINES = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7),
              (5, 6, 1), (6, 7, 2), (7, 1, 3)]


def octonion_product_index(i, j):
    """For the canonical table and i,j in 1..7: e_i e_j = sign * e_k."""
    o = canonical_octonions()
    row = o.mult[(i, j)]
    ((k, s),) = row.items()
    return int(s), k


def check_index_cycling():
    """e_i e_j = s e_k implies e_{i+1} e_{j+1} = s e_{k+1} (indices mod 7)."""
    nxt = lambda i: i % 7 + 1
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            s, k = octonion_product_index(i, j)
            s2, k2 = octonion_product_index(nxt(i), nxt(j))
            if (s2, k2) != (s, nxt(k)):
                return False
    return True


def check_index_doubling():
    """e_i e_j = s e_k implies e_{2i} e_{2j} = s e_{2k} (indices mod 7)."""
    dbl = lambda i: (2 * i - 1) % 7 + 1
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            s, k = octonion_product_index(i, j)
            s2, k2 = octonion_product_index(dbl(i), dbl(j))
            if (s2, k2) != (s, dbl(k)):
                return False
    return True


def check_fano_lines():
    """Each oriented line (i,j,k) has e_i e_j = e_k cyclically."""
    for (i, j, k) in FANO_LINES:
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            if octonion_product_index(a, b) != (1, c):
                return False
            if octonion_product_index(b, a) != (-1, c):
                return False
    return True


# -- property checkers --------------------------------------------------------


def is_real(a):
    """Conjugation is the identity."""
    return a.star == Mat.identity(a.dim)


def is_commutative(a):
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            if a.mult.get((i, j), {}) != a.mult.get((j, i), {}):
                return False
    return True


def is_associative(a):
    bs = a.basis_elements()
    for x in bs:
        for y in bs:
            for z in bs:
                if not associator(x, y, z).is_zero():
                    return False
    return True


def is_alternative(a):
    """The associator is alternating, checked on all basis triples.

    By trilinearity, antisymmetry under the two adjacent transpositions on
    basis triples is equivalent to the associator being alternating.
    """
    bs = a.basis_elements()
    n = a.dim
    assoc = [[[associator(bs[i], bs[j], bs[k]) for k in range(n)]
              for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not (assoc[i][j][k] + assoc[j][i][k]).is_zero():
                    return False
                if not (assoc[i][j][k] + assoc[i][k][j]).is_zero():
                    return False
    return True


def is_nicely_normed(a):
    """a + a* scalar for all basis a, polarized form scalar and positive
    definite."""
    bs = a.basis_elements()
    for x in bs:
        if not (x + x.conjugate()).scalar_part_only():
            return False
    n = a.dim
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            # polarization of a a*: (e_i e_j* + e_j e_i*) / 2 must be scalar
            p = bs[i] * bs[j].conjugate() + bs[j] * bs[i].conjugate()
            if not p.scalar_part_only():
                return False
            gram[i][j] = gram[j][i] = p.re() / 2
    pos, neg, zero = ldlt_signature(Mat(gram))
    return neg == 0 and zero == 0


def check_cd_propositions(a):
    """Flag report {real, commutative, associative, alternative,
    nicely_normed} for one algebra."""
    return {
        "real": is_real(a),
        "commutative": is_commutative(a),
        "associative": is_associative(a),
        "alternative": is_alternative(a),
        "nicely_normed": is_nicely_normed(a),
    }


def alternative_witness(a):
    """A basis triple (i,j,k) violating associator antisymmetry, or None."""
    bs = a.basis_elements()
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                aijk = associator(bs[i], bs[j], bs[k])
                if not (aijk + associator(bs[j], bs[i], bs[k])).is_zero():
                    return (i, j, k)
                if not (aijk + associator(bs[i], bs[k], bs[j])).is_zero():
                    return (i, j, k)
    return None


def find_zero_divisor(a):
    """First (x, y), both nonzero, with x y = 0, among (e_i +- e_j)(e_k +- e_l).

    Search order is deterministic: i<j, then k<l, then the sign pattern
    (+,+), (+,-), (-,+) is folded away by linearity, so only y = e_k + e_l
    and y = e_k - e_l are tried.  Returns None if the family has no hit.
    """
    n = a.dim
    bs = a.basis_elements()
    for i in range(n):
        for j in range(i + 1, n):
            x = bs[i] + bs[j]
            for k in range(n):
                for l in range(k + 1, n):
                    for sgn in (1, -1):
                        y = bs[k] + sgn * bs[l]
                        if (x * y).is_zero():
                            return (x, y)
    return None


def basic_triple_iso(algebra, f1, f2, f3):
    """Isomorphism from the canonical octonions determined by a basic triple.

    f1, f2, f3 must be unit-norm imaginary elements of an 8-dimensional
    alternative algebra, with f2 orthogonal to <1, f1> and f3 orthogonal to
    the subalgebra spanned by 1, f1, f2, f1 f2.  Returns the list of eight
    images [1, f1, f2, f3, f1 f2, f2 f3, f3 (f1 f2), f1 f3] after verifying
    all 64 canonical basis products map correctly.
    """
    one = algebra.one()
    for f in (f1, f2, f3):
        if f.norm_sq() != 1:
            raise ValueError("triple element is not unit norm")
        if inner(one, f) != 0:
            raise ValueError("triple element is not imaginary")
    if inner(f1, f2) != 0:
        raise ValueError("f2 not orthogonal to f1")
    f12 = f1 * f2
    for g in (f1, f2, f12):
        if inner(f3, g) != 0:
            raise ValueError("f3 not orthogonal to the subalgebra of f1, f2")
    images = [one, f1, f2, f3, f12, f2 * f3, f3 * f12, f1 * f3]
    o = canonical_octonions()
    for i in range(8):
        for j in range(8):
            lhs = images[i] * images[j]
            rhs = algebra.zero()
            for k, c in o.mult.get((i, j), {}).items():
                rhs = rhs + c * images[k]
            if lhs != rhs:
                raise ValueError("not an isomorphism at basis pair"
                                 " (%d, %d)" % (i, j))
    return images
