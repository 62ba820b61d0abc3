"""Derivation algebras by exact nullspace solving.

A derivation of a product is a linear map with D(ab) = D(a)b + a D(b).
The space of all of them is the kernel of a linear system in the dim^2
operator entries; the system is streamed row by row into the exact
eliminator, in lexicographic (i, j) order.  The same path handles the
octonions (bilinear table) and the 27-dimensional hermitian matrix
algebras (symmetric table).

Also here: the inner derivation D_{x,y} a = [[x,y],a] - 3[x,y,a] of an
alternative algebra, the cross-product geometry on the imaginary
octonions, the decomposition of the skew maps of O and of Im(O), and
the bracket on Der(K) + sa_3(K) that realizes the derivations of the
hermitian 3x3 algebra over K.
"""

from fractions import Fraction
import random

from .algebras import inner, commutator, associator
from .cayley_dickson import canonical_octonions
from .jordan import (JordanElement, jordan_mult_table, jordan_coords,
                     from_jordan_coords)
from .liealg import LieAlgebra, build_from_operators
from .linalg import Mat, LinearSystem, ReducedBasis, rank

_F0 = Fraction(0)
_F1 = Fraction(1)

try:
    import numpy as _np
except ImportError:          # pragma: no cover
    _np = None

# numpy int64 products must stay below 2^62; fall back to exact
# fractions when scaled entries get anywhere near that.
_INT64_SAFE = 1 << 62


def _tget(table, i, j, symmetric):
    if symmetric and j < i:
        i, j = j, i
    return table.get((i, j), {})


def _leibniz_rows(dim, table, symmetric):
    """Yield the Leibniz equations, one sparse row per (i, j, component).

    Unknown D[r][c] lives at column r*dim + c.  The equation for pair
    (i, j) and component k reads
        sum_m c_ijm D[k][m] - sum_m c_mjk D[m][i] - sum_m c_imk D[m][j] = 0.
    """
    for i in range(dim):
        for j in range(i if symmetric else 0, dim):
            rows = [{} for _ in range(dim)]
            for m, c in _tget(table, i, j, symmetric).items():
                for k in range(dim):
                    col = k * dim + m
                    rows[k][col] = rows[k].get(col, _F0) + c
            for m in range(dim):
                for k, c in _tget(table, m, j, symmetric).items():
                    col = m * dim + i
                    rows[k][col] = rows[k].get(col, _F0) - c
                for k, c in _tget(table, i, m, symmetric).items():
                    col = m * dim + j
                    rows[k][col] = rows[k].get(col, _F0) - c
            for r in rows:
                r = {c: v for c, v in r.items() if v}
                if r:
                    yield r


def _leibniz_ok(D, dim, table, symmetric):
    """Re-check D(e_i e_j) = D(e_i)e_j + e_i D(e_j) straight off the table,
    independently of how D was obtained."""
    ints, den = D.scaled_ints()
    if _np is not None:
        m = max((abs(x) for r in ints for x in r), default=0)
        if m * dim * 4 < _INT64_SAFE:
            return _leibniz_ok_int(ints, dim, table, symmetric)
    cols = [[D[k, m] for k in range(dim)] for m in range(dim)]
    for i in range(dim):
        for j in range(i if symmetric else 0, dim):
            lhs = [_F0] * dim
            for m, c in _tget(table, i, j, symmetric).items():
                col = cols[m]
                for k in range(dim):
                    if col[k]:
                        lhs[k] += c * col[k]
            for m in range(dim):
                dmi, dmj = D[m, i], D[m, j]
                if dmi:
                    for k, c in _tget(table, m, j, symmetric).items():
                        lhs[k] -= dmi * c
                if dmj:
                    for k, c in _tget(table, i, m, symmetric).items():
                        lhs[k] -= dmj * c
            if any(lhs):
                return False
    return True


def _leibniz_ok_int(ints, dim, table, symmetric):
    """Integer fast path: the Leibniz residual as three contractions of
    the scaled table against the scaled operator."""
    den = 1
    for (i, j), row in table.items():
        for c in row.values():
            d = c.denominator
            den = den // _gcd(den, d) * d
    t = _np.zeros((dim, dim, dim), dtype=_np.int64)
    for (i, j), row in table.items():
        for k, c in row.items():
            v = int(c * den)
            t[i, j, k] = v
            if symmetric:
                t[j, i, k] = v
    d = _np.array(ints, dtype=_np.int64)
    lhs = _np.einsum("ijm,km->ijk", t, d)
    rhs = _np.einsum("mi,mjk->ijk", d, t) + _np.einsum("mj,imk->ijk", d, t)
    return bool((lhs == rhs).all())


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class DerivationBasis:
    """Exact basis of the derivation algebra of one product table.

    basis is a list of dim x dim matrices, each satisfying the Leibniz
    law on every basis pair; they are linearly independent (canonical
    kernel vectors).
    """

    __slots__ = ("name", "dim", "basis", "_reduced")

    def __init__(self, name, dim, basis):
        self.name = name
        self.dim = dim
        self.basis = list(basis)
        self._reduced = None

    def __len__(self):
        return len(self.basis)

    def reduced(self):
        if self._reduced is None:
            self._reduced = ReducedBasis([m.flat() for m in self.basis])
        return self._reduced

    def coords(self, mat):
        """Coordinates of a matrix in the basis; ValueError if outside."""
        return self.reduced().coords(mat.flat())

    def contains(self, mat):
        try:
            self.coords(mat)
            return True
        except ValueError:
            return False

    def liealg(self, name=None):
        """The basis as a Lie algebra under commutator; raises if the
        span is not closed."""
        return build_from_operators(self.basis, name or self.name)


def _solve_derivations(name, dim, table, symmetric):
    sys_ = LinearSystem(dim * dim)
    for row in _leibniz_rows(dim, table, symmetric):
        sys_.add_row(row)
    kernel = sys_.nullspace()
    mats = [Mat([[v[r * dim + c] for c in range(dim)] for r in range(dim)])
            for v in kernel]
    for m in mats:
        if not _leibniz_ok(m, dim, table, symmetric):
            raise RuntimeError("%s: solver returned a non-derivation" % name)
    return DerivationBasis(name, dim, mats)


def derivation_algebra(algebra):
    """All derivations of a StarAlgebra, by exact elimination."""
    if algebra.dim > 64:
        raise ValueError("derivation solving capped at dim 64")
    return _solve_derivations("der(%s)" % algebra.name, algebra.dim,
                              algebra.mult, symmetric=False)


def jordan_derivation_algebra(algebra, n=3):
    """All derivations of the hermitian n x n matrices over a star
    algebra, for the symmetrized product."""
    basis, table = jordan_mult_table(algebra, n)
    return _solve_derivations("der(h%d(%s))" % (n, algebra.name),
                              len(basis), table, symmetric=True)


def inner_derivation(x, y, verify=True):
    """The operator a -> [[x,y],a] - 3[x,y,a].

    In an alternative algebra this satisfies the Leibniz law; the check
    runs over all basis pairs and a failure raises ValueError.
    """
    if x.algebra is not y.algebra:
        raise ValueError("elements of different algebras")
    algebra = x.algebra
    xy = commutator(x, y)
    cols = []
    for e in algebra.basis_elements():
        img = commutator(xy, e) - 3 * associator(x, y, e)
        cols.append(img.coords)
    D = Mat([[cols[j][i] for j in range(algebra.dim)]
             for i in range(algebra.dim)])
    if verify and not _leibniz_ok(D, algebra.dim, algebra.mult, False):
        raise ValueError("inner derivation violates the Leibniz law; "
                         "the algebra is not alternative here")
    return D


def inner_span_rank(algebra):
    """Rank of span{D_{e_i, e_j}} over all basis pairs i < j."""
    basis = algebra.basis_elements()
    flats = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            D = inner_derivation(basis[i], basis[j], verify=False)
            if not D.is_zero():
                flats.append(D.flat())
    return rank(flats, algebra.dim * algebra.dim)


# ---------------------------------------------------------------------------
# cross-product geometry on the imaginary octonions

def oct_cross(a, b):
    """a x b = (ab - ba)/2; on imaginary elements this is the
    seven-dimensional cross product."""
    return commutator(a, b) / 2


def _random_imaginary(algebra, rng, span=9):
    coords = [_F0] + [Fraction(rng.randint(-span, span))
                      for _ in range(algebra.dim - 1)]
    return algebra.element(coords)


def _im_multiplication_matrix(a, b):
    """Matrix of c -> a x (b x c) on the imaginary basis."""
    algebra = a.algebra
    basis = algebra.basis_elements()
    cols = []
    for i in range(1, algebra.dim):
        img = oct_cross(a, oct_cross(b, basis[i]))
        cols.append(img.coords[1:])
    d = algebra.dim - 1
    return Mat([[cols[j][i] for j in range(d)] for i in range(d)])


def phi_form(x, y, z):
    """phi(x,y,z) = <x, yz>, the alternating 3-form on Im(O)."""
    return inner(x, y * z)


def g2_geometry_suite(samples=500, seed=42):
    """Exact checks of the cross-product geometry on Im(O).

    Runs on all imaginary basis pairs and triples plus seeded random
    rational imaginary vectors:
      (i)   a x b is bilinear and antisymmetric
      (ii)  |a x b|^2 + <a,b>^2 = |a|^2 |b|^2
      (iii) a x b is orthogonal to a and to b
      (iv)  a x b = ab + <a,b>  (as octonions)
      (v)   <a,b> = -(1/6) tr(a x (b x .))
      (vi)  phi(x,y,z) = <x,yz> is alternating
      (vii) the associator of imaginaries is imaginary and alternating
    Returns a report dict; "pass" is the conjunction.
    """
    O = canonical_octonions()
    basis = O.basis_elements()
    im = basis[1:]
    one = basis[0]
    rng = random.Random(seed)
    items = {k: True for k in ("i", "ii", "iii", "iv", "v", "vi", "vii")}
    witness = None

    def note(key, ok, w):
        nonlocal witness
        if not ok:
            items[key] = False
            if witness is None:
                witness = (key, w)

    pair_pool = [(a, b) for a in im for b in im]
    for _ in range(samples):
        pair_pool.append((_random_imaginary(O, rng),
                          _random_imaginary(O, rng)))
    for a, b in pair_pool:
        c = oct_cross(a, b)
        note("i", c == -oct_cross(b, a), (a, b))
        note("ii", (c.norm_sq() + inner(a, b) ** 2
                    == a.norm_sq() * b.norm_sq()), (a, b))
        note("iii", inner(c, a) == 0 and inner(c, b) == 0, (a, b))
        note("iv", c == a * b + inner(a, b) * one, (a, b))
        note("v", inner(a, b)
             == -Fraction(_im_multiplication_matrix(a, b).trace(), 6), (a, b))
    # bilinearity spot check on random combinations
    for _ in range(samples // 10 + 1):
        a, b, c = (_random_imaginary(O, rng) for _ in range(3))
        s = Fraction(rng.randint(-5, 5))
        note("i", oct_cross(a + s * b, c)
             == oct_cross(a, c) + s * oct_cross(b, c), (a, b, c))

    triple_pool = [(x, y, z) for x in im for y in im for z in im]
    for _ in range(samples):
        triple_pool.append(tuple(_random_imaginary(O, rng)
                                 for _ in range(3)))
    for x, y, z in triple_pool:
        v = phi_form(x, y, z)
        note("vi", phi_form(y, x, z) == -v and phi_form(x, z, y) == -v,
             (x, y, z))
        asc = associator(x, y, z)
        ok = (asc.re() == 0
              and associator(y, x, z) == -asc
              and associator(x, z, y) == -asc
              and associator(x, x, z).is_zero())
        note("vii", ok, (x, y, z))

    e1, e2, e4 = basis[1], basis[2], basis[4]
    examples = {
        "e1 x e2 = e4": oct_cross(e1, e2) == e4,
        "<e1,e1> via trace form = 1":
            -Fraction(_im_multiplication_matrix(e1, e1).trace(), 6) == 1,
        "phi(e1,e2,e4) = 1": phi_form(e1, e2, e4) == 1,
    }
    ok = all(items.values()) and all(examples.values())
    return {"pass": ok, "items": items, "examples": examples,
            "samples": samples, "seed": seed, "witness": witness}


def g2_invariance_check(der, samples=100, seed=42):
    """D(a x b) = D(a) x b + a x D(b) for every derivation in the basis,
    on seeded random pairs."""
    O = canonical_octonions()
    rng = random.Random(seed)
    for _ in range(samples):
        a = _random_imaginary(O, rng)
        b = _random_imaginary(O, rng)
        ab = oct_cross(a, b)
        for D in der.basis:
            da = O.element(D.apply(a.coords))
            db = O.element(D.apply(b.coords))
            if O.element(D.apply(ab.coords)) != (oct_cross(da, b)
                                                 + oct_cross(a, db)):
                return False
    return True


def multiplication_operator(a, side):
    """Matrix of left ("L") or right ("R") multiplication by a."""
    algebra = a.algebra
    cols = []
    for e in algebra.basis_elements():
        img = a * e if side == "L" else e * a
        cols.append(img.coords)
    return Mat([[cols[j][i] for j in range(algebra.dim)]
                for i in range(algebra.dim)])


def so_decomposition_checks():
    """skew(O) = der(O) + L_Im + R_Im and skew(Im O) = der(O) + ad_Im.

    Builds the candidate operators, checks each is skew-adjoint, and
    settles the direct sums by rank arithmetic.
    """
    O = canonical_octonions()
    der = derivation_algebra(O)
    basis = O.basis_elements()
    im = basis[1:]
    L = [multiplication_operator(a, "L") for a in im]
    R = [multiplication_operator(a, "R") for a in im]
    report = {}
    report["skew"] = all(m.transpose() == -m
                         for m in der.basis + L + R)
    # derivations kill the unit and preserve the imaginary subspace
    report["unit_killed"] = all(
        all(D[i, 0] == 0 and D[0, i] == 0 for i in range(8))
        for D in der.basis)
    fl = lambda ms: [m.flat() for m in ms]
    report["rank_der"] = rank(fl(der.basis), 64)
    report["rank_L_R"] = rank(fl(L + R), 64)
    report["rank_der_L"] = rank(fl(der.basis + L), 64)
    report["rank_der_R"] = rank(fl(der.basis + R), 64)
    report["rank_so8"] = rank(fl(der.basis + L + R), 64)

    def restrict(m):
        return Mat([[m[i, j] for j in range(1, 8)] for i in range(1, 8)])

    der_im = [restrict(D) for D in der.basis]
    ad_im = [restrict(l - r) for l, r in zip(L, R)]
    report["skew_im"] = all(m.transpose() == -m for m in der_im + ad_im)
    report["rank_im_der"] = rank(fl(der_im), 49)
    report["rank_im_ad"] = rank(fl(ad_im), 49)
    report["rank_so7"] = rank(fl(der_im + ad_im), 49)
    report["pass"] = (report["skew"] and report["unit_killed"]
                      and report["skew_im"]
                      and report["rank_der"] == 14
                      and report["rank_L_R"] == 14
                      and report["rank_der_L"] == 21
                      and report["rank_der_R"] == 21
                      and report["rank_so8"] == 28
                      and report["rank_im_der"] == 14
                      and report["rank_im_ad"] == 7
                      and report["rank_so7"] == 21)
    return report


# ---------------------------------------------------------------------------
# the 3-form, its dual 4-form, and the associator constant

def _perm_sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def phi_tensor():
    """phi[i][j][k] = <e_{i+1}, e_{j+1} e_{k+1}> on the imaginary basis."""
    O = canonical_octonions()
    im = O.basis_elements()[1:]
    return [[[phi_form(x, y, z) for z in im] for y in im] for x in im]


def psi_tensor():
    """The 4-form dual to phi for the orientation (e1, ..., e7):
    psi_{abcd} = sign(efg abcd) phi_{efg}, (e,f,g) the sorted complement."""
    phi = phi_tensor()
    psi = {}
    idx = range(7)
    for a in idx:
        for b in range(a + 1, 7):
            for c in range(b + 1, 7):
                for d in range(c + 1, 7):
                    rest = [m for m in idx if m not in (a, b, c, d)]
                    e, f, g = rest
                    sign = _perm_sign((e, f, g, a, b, c, d))
                    psi[(a, b, c, d)] = sign * phi[e][f][g]
    return psi


def associator_form_constant():
    """The exact constant c with <w,[x,y,z]> = c psi(w,x,y,z) on Im(O).

    Verifies first that <w,[x,y,z]> is totally antisymmetric, then that
    it is proportional to the dual 4-form, and returns (c, report).
    """
    O = canonical_octonions()
    im = O.basis_elements()[1:]
    a4 = {}
    for a in range(7):
        for b in range(a + 1, 7):
            for c in range(b + 1, 7):
                for d in range(c + 1, 7):
                    a4[(a, b, c, d)] = inner(im[a],
                                             associator(im[b], im[c], im[d]))
    # antisymmetry: re-evaluate a permuted representative per quadruple
    alternating = True
    for (a, b, c, d), v in a4.items():
        w = inner(im[b], associator(im[a], im[c], im[d]))
        if w != -v:
            alternating = False
            break
        if inner(im[a], associator(im[b], im[b], im[d])) != 0:
            alternating = False
            break
    psi = psi_tensor()
    const = None
    proportional = True
    for key, v in a4.items():
        p = psi[key]
        if (p == 0) != (v == 0):
            proportional = False
            break
        if p != 0:
            ratio = v / p
            if const is None:
                const = ratio
            elif const != ratio:
                proportional = False
                break
    report = {"alternating": alternating, "proportional": proportional,
              "constant": const}
    if not (alternating and proportional):
        raise RuntimeError("associator 4-form structure check failed: %r"
                           % report)
    return const, report


# ---------------------------------------------------------------------------
# Der(K) + sa_3(K) and its bracket

def minus_star_units(algebra):
    """Indices of basis elements with e* = -e."""
    out = []
    for i, e in enumerate(algebra.basis_elements()):
        if e.conjugate() == -e:
            out.append(i)
    return out


def sa3_basis(algebra):
    """Basis of the traceless antihermitian 3x3 matrices over a star
    algebra, as 3x3 grids.

    Off-diagonal first, position-major over (0,1), (0,2), (1,2) with a
    basis unit u at (i,j) and -u* at (j,i); then diag(u,-u,0) and
    diag(0,u,-u) for each basis unit u with u* = -u.
    """
    zero = algebra.zero()
    basis = algebra.basis_elements()
    out = []
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        for u in basis:
            grid = [[zero] * 3 for _ in range(3)]
            grid[i][j] = u
            grid[j][i] = -u.conjugate()
            out.append(tuple(tuple(r) for r in grid))
    for k in minus_star_units(algebra):
        u = basis[k]
        out.append(((u, zero, zero), (zero, -u, zero), (zero, zero, zero)))
        out.append(((zero, zero, zero), (zero, u, zero), (zero, zero, -u)))
    return out


def check_sa3_grid(algebra, grid):
    tr = grid[0][0] + grid[1][1] + grid[2][2]
    if not tr.is_zero():
        raise ValueError("matrix part has nonzero trace")
    for i in range(3):
        for j in range(3):
            if grid[j][i] != -grid[i][j].conjugate():
                raise ValueError("matrix part is not antihermitian")


class DerSa3:
    """Element of Der(K) + sa_3(K): a derivation of K and a traceless
    antihermitian 3x3 matrix over K.  Acts on the hermitian 3x3 algebra
    by the derivation entrywise plus the matrix commutator."""

    __slots__ = ("algebra", "der", "mat")

    def __init__(self, algebra, der, mat, check=True):
        mat = tuple(tuple(r) for r in mat)
        if check:
            if der.shape != (algebra.dim, algebra.dim):
                raise ValueError("derivation part has the wrong shape")
            check_sa3_grid(algebra, mat)
        self.algebra = algebra
        self.der = der
        self.mat = mat

    def __eq__(self, other):
        return (isinstance(other, DerSa3) and self.algebra is other.algebra
                and self.der == other.der and self.mat == other.mat)

    def __ne__(self, other):
        return not self.__eq__(other)

    def is_zero(self):
        return self.der.is_zero() and all(x.is_zero()
                                          for r in self.mat for x in r)


def _apply_der_entrywise(algebra, der, grid):
    return tuple(tuple(algebra.element(der.apply(x.coords)) for x in row)
                 for row in grid)


def _grid_matmul(zero, a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(3)), zero)
                       for j in range(3)) for i in range(3))


def _inner_derivation_sum(algebra, x, y):
    """(1/3) sum_{i,j} D_{x_ij, y_ij} as one matrix."""
    n = algebra.dim
    acc = [[_F0] * n for _ in range(n)]
    for i in range(3):
        for j in range(3):
            a, b = x[i][j], y[i][j]
            if a.scalar_part_only() or b.scalar_part_only():
                continue
            D = inner_derivation(a, b, verify=False)
            for r in range(n):
                arow = acc[r]
                drow = D.rows[r]
                for c in range(n):
                    if drow[c]:
                        arow[c] += drow[c]
    third = Fraction(1, 3)
    return Mat([[v * third for v in row] for row in acc])


def der_h3_bracket(u, v):
    """Bracket on Der(K) + sa_3(K):

    derivation part  [D,D'] + (1/3) sum_ij D_{x_ij, y_ij}
    matrix part      D x' - D' x + [x,x']_0
    with [x,x']_0 the commutator minus a third of its trace.
    """
    if u.algebra is not v.algebra:
        raise ValueError("elements of different algebras")
    algebra = u.algebra
    zero = algebra.zero()
    der_part = (u.der * v.der - v.der * u.der
                + _inner_derivation_sum(algebra, u.mat, v.mat))
    m = _grid_matmul(zero, u.mat, v.mat)
    m2 = _grid_matmul(zero, v.mat, u.mat)
    comm = [[m[i][j] - m2[i][j] for j in range(3)] for i in range(3)]
    tr3 = (comm[0][0] + comm[1][1] + comm[2][2]) / 3
    for i in range(3):
        comm[i][i] = comm[i][i] - tr3
    dxp = _apply_der_entrywise(algebra, u.der, v.mat)
    dpx = _apply_der_entrywise(algebra, v.der, u.mat)
    mat_part = [[dxp[i][j] - dpx[i][j] + comm[i][j] for j in range(3)]
                for i in range(3)]
    return DerSa3(algebra, der_part, mat_part)


def act_on_h3(u, a):
    """Action of a Der(K) + sa_3(K) element on a hermitian 3x3 element:
    the derivation entrywise plus the commutator with the matrix part."""
    algebra = u.algebra
    zero = algebra.zero()
    d = _apply_der_entrywise(algebra, u.der, a.entries)
    xa = _grid_matmul(zero, u.mat, a.entries)
    ax = _grid_matmul(zero, a.entries, u.mat)
    grid = [[d[i][j] + xa[i][j] - ax[i][j] for j in range(3)]
            for i in range(3)]
    return JordanElement(algebra, grid)


def der_sa3_basis(algebra, der=None):
    """Basis of Der(K) + sa_3(K): derivation part first, then sa_3."""
    if der is None:
        der = derivation_algebra(algebra)
    n = algebra.dim
    zero_mat = Mat.zeros(n, n)
    zero = algebra.zero()
    zero_grid = tuple((zero,) * 3 for _ in range(3))
    out = [DerSa3(algebra, D, zero_grid, check=False) for D in der.basis]
    for grid in sa3_basis(algebra):
        out.append(DerSa3(algebra, zero_mat, grid, check=False))
    return out, der


def _der_sa3_coords(u, der):
    """Coordinates in the der_sa3_basis order; exact, with the diagonal
    read back through the d1/d2 patterns."""
    algebra = u.algebra
    if der is not None and len(der):
        dc = der.coords(u.der)
    else:
        if not u.der.is_zero():
            raise ValueError("derivation part outside the basis")
        dc = []
    out = list(dc)
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        out.extend(u.mat[i][j].coords)
    a = u.mat[0][0]
    c = u.mat[2][2]
    for k in minus_star_units(algebra):
        out.append(a.coords[k])
        out.append(-c.coords[k])
    return out


def der_sa3_liealg(algebra, name=None):
    """Der(K) + sa_3(K) as structure constants under der_h3_bracket.

    Every bracket is computed exactly and re-expanded in the basis; the
    expansion is verified by reconstruction.
    """
    basis, der = der_sa3_basis(algebra)
    n = len(basis)
    if name is None:
        name = "der(K)+sa3(%s)" % algebra.name
    labels = (["D%d" % i for i in range(len(der))]
              + ["X%d" % i for i in range(n - len(der))])
    f = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = der_h3_bracket(basis[i], basis[j])
            coords = _der_sa3_coords(w, der)
            row = {k: c for k, c in enumerate(coords) if c}
            if not _reconstruct_matches(basis, row, w):
                raise RuntimeError("bracket fell outside the basis at "
                                   "(%d, %d)" % (i, j))
            if row:
                f[(i, j)] = row
    return LieAlgebra(name, n, f, labels)


def _reconstruct_matches(basis, row, w):
    algebra = w.algebra
    n = algebra.dim
    der_acc = Mat.zeros(n, n)
    zero = algebra.zero()
    mat_acc = [[zero] * 3 for _ in range(3)]
    for k, c in row.items():
        b = basis[k]
        if not b.der.is_zero():
            der_acc = der_acc + c * b.der
        for i in range(3):
            for j in range(3):
                if not b.mat[i][j].is_zero():
                    mat_acc[i][j] = mat_acc[i][j] + c * b.mat[i][j]
    return (der_acc == w.der
            and all(mat_acc[i][j] == w.mat[i][j]
                    for i in range(3) for j in range(3)))


def der_action_matrix(u, jbasis):
    """Matrix of act_on_h3(u, .) on the given hermitian basis."""
    cols = [jordan_coords(act_on_h3(u, b)) for b in jbasis]
    d = len(jbasis)
    return Mat([[cols[j][i] for j in range(d)] for i in range(d)])


def op_on_jordan(mat, a):
    """Apply a coordinate-space operator to a hermitian matrix element."""
    return from_jordan_coords(a.algebra, a.n, mat.apply(jordan_coords(a)))
