"""Tensor star algebras and the magic-square Lie algebras.

The tensor algebra K (x) K' multiplies factorwise and conjugates both
factors; its basis is ordered left-index major.  On top of it sits the
Lie algebra M(K,K') = der(K) + der(K') + sa_3(K (x) K') with the
bracket: derivation parts bracket as matrices (factors commute), act
entrywise on the matrix part, and two matrix parts give

    [X,Y] = (XY - YX) - (1/3) tr(XY - YX) I
            + (1/3) sum_ij D_{X_ij, Y_ij}

where D splits over the factors through
D_{a(x)a', b(x)b'} = <a',b'> D_{a,b} + <a,b> D_{a',b'}.  The 1/3 is
taken literally; the Jacobi identity is the arbiter.

Basis order of M(K,K'): der(K) block, der(K') block, then the sa_3
block (off-diagonals position-major over (0,1), (0,2), (1,2), then the
diagonal pairs); this order is what the JSON export records.
"""

from fractions import Fraction

from .algebras import StarAlgebra
from .cayley_dickson import (real_algebra, complex_algebra, quaternions,
                             canonical_octonions)
from .derivations import (derivation_algebra, jordan_derivation_algebra,
                          inner_derivation, sa3_basis, minus_star_units,
                          check_sa3_grid, der_sa3_liealg)
from .liealg import LieAlgebra
from .linalg import Mat

_F0 = Fraction(0)
_F1 = Fraction(1)

_FACTORY = {"R": real_algebra, "C": complex_algebra,
            "H": quaternions, "O": canonical_octonions}
_TRI_DIM = {1: 0, 2: 2, 4: 9, 8: 28}

_factor_cache = {}
_tensor_cache = {}
_tensor_by_algebra = {}
_der_cache = {}
_jder_dim_cache = {}
_magic_cache = {}


def factor_algebra(label):
    """The shared instance of R, C, H, or O for the given label."""
    key = label.upper()
    if key not in _FACTORY:
        raise ValueError("unknown algebra label %r (use R, C, H, O)" % label)
    if key not in _factor_cache:
        _factor_cache[key] = _FACTORY[key]()
    return _factor_cache[key]


def _factor_derivations(label):
    key = label.upper()
    if key not in _der_cache:
        _der_cache[key] = derivation_algebra(factor_algebra(key))
    return _der_cache[key]


class TensorAlgebra:
    """K (x) K' as a star algebra; e_i (x) e'_j sits at index i*dim' + j."""

    __slots__ = ("left", "right", "algebra", "dim_left", "dim_right")

    def __init__(self, left, right):
        self.left = left.upper()
        self.right = right.upper()
        a = factor_algebra(left)
        b = factor_algebra(right)
        self.dim_left = a.dim
        self.dim_right = b.dim
        d2 = b.dim
        mult = {}
        for (i, k), row1 in a.mult.items():
            for (j, l), row2 in b.mult.items():
                out = {}
                for m, c1 in row1.items():
                    for n, c2 in row2.items():
                        out[m * d2 + n] = c1 * c2
                mult[(i * d2 + j, k * d2 + l)] = out
        star = _kron(a.star, b.star)
        self.algebra = StarAlgebra("%sx%s" % (self.left, self.right),
                                   a.dim * b.dim, mult, star)
        _tensor_by_algebra[id(self.algebra)] = self

    def index(self, i, j):
        return i * self.dim_right + j

    def pair(self, k):
        return divmod(k, self.dim_right)


def _kron(a, b):
    rows = []
    for i in range(a.m):
        for k in range(b.m):
            rows.append([a[i, j] * b[k, l]
                         for j in range(a.n) for l in range(b.n)])
    return Mat(rows)


def tensor_algebra(K, K2):
    """The (cached) tensor star algebra for a pair of labels."""
    key = (K.upper(), K2.upper())
    if key not in _tensor_cache:
        _tensor_cache[key] = TensorAlgebra(*key)
    return _tensor_cache[key]


def _resolve_tensor(element):
    t = _tensor_by_algebra.get(id(element.algebra))
    if t is None:
        raise ValueError("element does not belong to a tensor algebra")
    return t


# ---------------------------------------------------------------------------
# inner-derivation tables of the factors

_inner_mat_cache = {}
_inner_coords_cache = {}


def _inner_table(label):
    """D_{e_a, e_b} for a < b, as matrices; zero entries omitted."""
    key = label.upper()
    if key not in _inner_mat_cache:
        alg = factor_algebra(key)
        basis = alg.basis_elements()
        tbl = {}
        for a in range(alg.dim):
            for b in range(a + 1, alg.dim):
                D = inner_derivation(basis[a], basis[b], verify=False)
                if not D.is_zero():
                    tbl[(a, b)] = D
        _inner_mat_cache[key] = tbl
    return _inner_mat_cache[key]


def _inner_coords(label):
    """Coordinates of each D_{e_a, e_b} in the derivation basis, each
    verified against the reduced basis once."""
    key = label.upper()
    if key not in _inner_coords_cache:
        der = _factor_derivations(key)
        tbl = {}
        for (a, b), D in _inner_table(key).items():
            tbl[(a, b)] = tuple(der.coords(D))
        _inner_coords_cache[key] = tbl
    return _inner_coords_cache[key]


def d_tensor(x, y):
    """Split D_{x,y} over the factors:
    D_{a(x)a',b(x)b'} = <a',b'> D_{a,b} + <a,b> D_{a',b'}, extended
    bilinearly.  Returns (matrix in der(K), matrix in der(K'))."""
    t = _resolve_tensor(x)
    if x.algebra is not y.algebra:
        raise ValueError("elements of different algebras")
    d1, d2 = t.dim_left, t.dim_right
    left = [[_F0] * d1 for _ in range(d1)]
    right = [[_F0] * d2 for _ in range(d2)]
    lt = _inner_table(t.left)
    rt = _inner_table(t.right)
    xs = [(k, c) for k, c in enumerate(x.coords) if c]
    ys = [(k, c) for k, c in enumerate(y.coords) if c]
    for kx, cx in xs:
        a, ap = divmod(kx, d2)
        for ky, cy in ys:
            b, bp = divmod(ky, d2)
            c = cx * cy
            if ap == bp and a != b:
                D = lt.get((a, b) if a < b else (b, a))
                if D is not None:
                    s = c if a < b else -c
                    for r in range(d1):
                        row = D.rows[r]
                        arow = left[r]
                        for q in range(d1):
                            if row[q]:
                                arow[q] += s * row[q]
            if a == b and ap != bp:
                D = rt.get((ap, bp) if ap < bp else (bp, ap))
                if D is not None:
                    s = c if ap < bp else -c
                    for r in range(d2):
                        row = D.rows[r]
                        arow = right[r]
                        for q in range(d2):
                            if row[q]:
                                arow[q] += s * row[q]
    return Mat(left), Mat(right)


# ---------------------------------------------------------------------------
# magic-square elements and the bracket

class MagicElement:
    """Triple (derivation of K, derivation of K', traceless antihermitian
    3x3 matrix over K (x) K')."""

    __slots__ = ("tensor", "dK", "dK2", "mat")

    def __init__(self, tensor, dK, dK2, mat, check=True):
        mat = tuple(tuple(r) for r in mat)
        if check:
            d1, d2 = tensor.dim_left, tensor.dim_right
            if dK.shape != (d1, d1) or dK2.shape != (d2, d2):
                raise ValueError("derivation part has the wrong shape")
            check_sa3_grid(tensor.algebra, mat)
        self.tensor = tensor
        self.dK = dK
        self.dK2 = dK2
        self.mat = mat

    def __eq__(self, other):
        return (isinstance(other, MagicElement)
                and self.tensor is other.tensor
                and self.dK == other.dK and self.dK2 == other.dK2
                and self.mat == other.mat)

    def __ne__(self, other):
        return not self.__eq__(other)

    def is_zero(self):
        return (self.dK.is_zero() and self.dK2.is_zero()
                and all(x.is_zero() for r in self.mat for x in r))


def _tensor_der_apply(t, dK, dK2, x):
    """(D (x) 1 + 1 (x) D') applied to a tensor-algebra element."""
    d2 = t.dim_right
    out = [_F0] * (t.dim_left * d2)
    for k, c in enumerate(x.coords):
        if not c:
            continue
        i, j = divmod(k, d2)
        for a in range(t.dim_left):
            v = dK[a, i]
            if v:
                out[a * d2 + j] += v * c
        for b in range(d2):
            v = dK2[b, j]
            if v:
                out[i * d2 + b] += v * c
    return t.algebra.element(out)


def _grid_matmul(zero, a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(3)), zero)
                       for j in range(3)) for i in range(3))


def vinberg_bracket(u, v):
    """The magic-square bracket of two MagicElements."""
    if u.tensor is not v.tensor:
        raise ValueError("elements over different tensor algebras")
    t = u.tensor
    zero = t.algebra.zero()
    third = Fraction(1, 3)
    dK = u.dK * v.dK - v.dK * u.dK
    dK2 = u.dK2 * v.dK2 - v.dK2 * u.dK2
    for i in range(3):
        for j in range(3):
            a, b = u.mat[i][j], v.mat[i][j]
            if a.is_zero() or b.is_zero():
                continue
            da, db = d_tensor(a, b)
            dK = dK + third * da
            dK2 = dK2 + third * db
    m = _grid_matmul(zero, u.mat, v.mat)
    m2 = _grid_matmul(zero, v.mat, u.mat)
    comm = [[m[i][j] - m2[i][j] for j in range(3)] for i in range(3)]
    tr3 = (comm[0][0] + comm[1][1] + comm[2][2]) / 3
    for i in range(3):
        comm[i][i] = comm[i][i] - tr3
    ua = [[_tensor_der_apply(t, u.dK, u.dK2, v.mat[i][j]) for j in range(3)]
          for i in range(3)]
    va = [[_tensor_der_apply(t, v.dK, v.dK2, u.mat[i][j]) for j in range(3)]
          for i in range(3)]
    mat = [[ua[i][j] - va[i][j] + comm[i][j] for j in range(3)]
           for i in range(3)]
    return MagicElement(t, dK, dK2, mat)


def magic_basis(K, K2):
    """Basis of M(K,K') in the documented block order, as MagicElements."""
    t = tensor_algebra(K, K2)
    derK = _factor_derivations(K)
    derK2 = _factor_derivations(K2)
    d1, d2 = t.dim_left, t.dim_right
    zK = Mat.zeros(d1, d1)
    zK2 = Mat.zeros(d2, d2)
    zero = t.algebra.zero()
    zgrid = tuple((zero,) * 3 for _ in range(3))
    out = [MagicElement(t, D, zK2, zgrid, check=False) for D in derK.basis]
    out += [MagicElement(t, zK, D, zgrid, check=False) for D in derK2.basis]
    out += [MagicElement(t, zK, zK2, g, check=False)
            for g in sa3_basis(t.algebra)]
    return out


def _x_coords(t, mat):
    """sa_3 coordinates of a grid, in sa3_basis order."""
    out = []
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        out.extend(mat[i][j].coords)
    a = mat[0][0]
    c = mat[2][2]
    for k in minus_star_units(t.algebra):
        out.append(a.coords[k])
        out.append(-c.coords[k])
    return out


def _x_from_coords(t, coords):
    alg = t.algebra
    zero = alg.zero()
    grid = [[zero] * 3 for _ in range(3)]
    pos = 0
    d = alg.dim
    for (i, j) in ((0, 1), (0, 2), (1, 2)):
        x = alg.element(coords[pos:pos + d])
        grid[i][j] = x
        grid[j][i] = -x.conjugate()
        pos += d
    units = alg.basis_elements()
    for k in minus_star_units(alg):
        u = units[k]
        c1, c2 = coords[pos], coords[pos + 1]
        pos += 2
        if c1:
            grid[0][0] = grid[0][0] + c1 * u
            grid[1][1] = grid[1][1] - c1 * u
        if c2:
            grid[1][1] = grid[1][1] + c2 * u
            grid[2][2] = grid[2][2] - c2 * u
    return tuple(tuple(r) for r in grid)


def magic_liealg(K, K2, name=None):
    """M(K,K') as exact structure constants in the documented basis order.

    Matrix-part brackets are verified by reconstruction from the basis;
    derivation-part coordinates come from the factor tables, each table
    entry verified against the reduced derivation basis once.
    """
    key = (K.upper(), K2.upper())
    if key in _magic_cache:
        return _magic_cache[key]
    t = tensor_algebra(K, K2)
    derK = _factor_derivations(K)
    derK2 = _factor_derivations(K2)
    nK, nK2 = len(derK), len(derK2)
    grids = sa3_basis(t.algebra)
    nX = len(grids)
    n = nK + nK2 + nX
    if name is None:
        name = "M(%s,%s)" % key
    labels = (["DL%d" % i for i in range(nK)]
              + ["DR%d" % i for i in range(nK2)]
              + ["X%d" % i for i in range(nX)])
    lcoords = _inner_coords(K)
    rcoords = _inner_coords(K2)
    d2 = t.dim_right
    zero = t.algebra.zero()
    third = Fraction(1, 3)

    # sparse (index, coeff) views of every grid entry
    entries = []
    for g in grids:
        e = {}
        for i in range(3):
            for j in range(3):
                sp = [(k, c) for k, c in enumerate(g[i][j].coords) if c]
                if sp:
                    e[(i, j)] = sp
        entries.append(e)

    f = {}

    def put(i, j, row):
        row = {k: c for k, c in row.items() if c}
        if row:
            f[(i, j)] = row

    # der x der: matrix commutators within each factor
    for (block, der, off) in (("L", derK, 0), ("R", derK2, nK)):
        for i in range(len(der)):
            for j in range(i + 1, len(der)):
                w = der.basis[i] * der.basis[j] - der.basis[j] * der.basis[i]
                if w.is_zero():
                    continue
                cs = der.coords(w)
                put(off + i, off + j,
                    {off + k: c for k, c in enumerate(cs) if c})

    # der x X: entrywise action, lands in the sa_3 block
    for (isK, der, off) in ((True, derK, 0), (False, derK2, nK)):
        zm = Mat.zeros(t.dim_left, t.dim_left)
        zm2 = Mat.zeros(d2, d2)
        for i, D in enumerate(der.basis):
            dK = D if isK else zm
            dK2 = zm2 if isK else D
            for x in range(nX):
                g = grids[x]
                img = [[_tensor_der_apply(t, dK, dK2, g[r][c])
                        for c in range(3)] for r in range(3)]
                check_sa3_grid(t.algebra, img)
                cs = _x_coords(t, img)
                row = {nK + nK2 + k: c for k, c in enumerate(cs) if c}
                if _x_from_coords(t, cs) != tuple(tuple(r) for r in img):
                    raise RuntimeError("entrywise action fell outside sa_3")
                put(off + i, nK + nK2 + x, row)

    # X x X: commutator minus trace part, plus the split inner derivations
    for xi in range(nX):
        gi = grids[xi]
        ei = entries[xi]
        for xj in range(xi + 1, nX):
            gj = grids[xj]
            ej = entries[xj]
            accL = [_F0] * nK
            accR = [_F0] * nK2
            for pos, spx in ei.items():
                spy = ej.get(pos)
                if not spy:
                    continue
                for kx, cx in spx:
                    a, ap = divmod(kx, d2)
                    for ky, cy in spy:
                        b, bp = divmod(ky, d2)
                        c = cx * cy
                        if ap == bp and a != b:
                            cs = lcoords.get((a, b) if a < b else (b, a))
                            if cs:
                                s = c if a < b else -c
                                for r, v in enumerate(cs):
                                    if v:
                                        accL[r] += s * v
                        if a == b and ap != bp:
                            cs = rcoords.get((ap, bp) if ap < bp else (bp, ap))
                            if cs:
                                s = c if ap < bp else -c
                                for r, v in enumerate(cs):
                                    if v:
                                        accR[r] += s * v
            m = _grid_matmul(zero, gi, gj)
            m2 = _grid_matmul(zero, gj, gi)
            comm = [[m[r][c] - m2[r][c] for c in range(3)] for r in range(3)]
            tr3 = (comm[0][0] + comm[1][1] + comm[2][2]) / 3
            for r in range(3):
                comm[r][r] = comm[r][r] - tr3
            check_sa3_grid(t.algebra, comm)
            cs = _x_coords(t, comm)
            if _x_from_coords(t, cs) != tuple(tuple(r) for r in comm):
                raise RuntimeError("matrix bracket fell outside sa_3")
            row = {}
            for k, v in enumerate(accL):
                if v:
                    row[k] = v * third
            for k, v in enumerate(accR):
                if v:
                    row[nK + k] = v * third
            for k, v in enumerate(cs):
                if v:
                    row[nK + nK2 + k] = v
            put(nK + nK2 + xi, nK + nK2 + xj, row)

    L = LieAlgebra(name, n, f, labels)
    _magic_cache[key] = L
    return L


def magic_dimension(K, K2):
    """dim M(K,K') without building the brackets."""
    t = tensor_algebra(K, K2)
    nX = 3 * t.algebra.dim + 2 * len(minus_star_units(t.algebra))
    return len(_factor_derivations(K)) + len(_factor_derivations(K2)) + nX


def dimension_accounting(K, K2):
    """Three independent dimension totals for M(K,K'); raises if they
    disagree.

    vinberg: der K + der K' + sa_3(K (x) K')
    tits:    der K + der(h_3(K')) + Im(K) * (3 dim K' + 2)
    barton_sudbery: tri K + tri K' + 3 dim K dim K'
    """
    a = factor_algebra(K)
    b = factor_algebra(K2)
    vin = magic_dimension(K, K2)
    tits = (len(_factor_derivations(K)) + _jordan_der_dim(K2)
            + (a.dim - 1) * (3 * b.dim + 2))
    bs = _TRI_DIM[a.dim] + _TRI_DIM[b.dim] + 3 * a.dim * b.dim
    report = {"vinberg": vin, "tits": tits, "barton_sudbery": bs,
              "agree": vin == tits == bs}
    if not report["agree"]:
        raise RuntimeError("dimension accountings disagree: %r" % report)
    return report


def _jordan_der_dim(label):
    key = label.upper()
    if key not in _jder_dim_cache:
        _jder_dim_cache[key] = len(
            jordan_derivation_algebra(factor_algebra(key), 3))
    return _jder_dim_cache[key]


# ---------------------------------------------------------------------------
# cross-checks

def swap_permutation(K, K2):
    """Index map sending the basis of M(K,K') to the basis of M(K',K)
    under the swap of derivation slots and the factor transpose of the
    tensor entries."""
    t = tensor_algebra(K, K2)
    t2 = tensor_algebra(K2, K)
    nK = len(_factor_derivations(K))
    nK2 = len(_factor_derivations(K2))
    d1, d2 = t.dim_left, t.dim_right
    dim = d1 * d2
    minus = minus_star_units(t.algebra)
    minus2 = minus_star_units(t2.algebra)
    mpos2 = {k: i for i, k in enumerate(minus2)}

    def tau(k):
        i, j = divmod(k, d2)
        return j * d1 + i

    perm = [None] * (nK + nK2 + 3 * dim + 2 * len(minus))
    for i in range(nK):
        perm[i] = nK2 + i
    for i in range(nK2):
        perm[nK + i] = i
    base = nK + nK2
    for p in range(3):
        for k in range(dim):
            perm[base + p * dim + k] = base + p * dim + tau(k)
    dbase = base + 3 * dim
    for i, k in enumerate(minus):
        j = mpos2[tau(k)]
        perm[dbase + 2 * i] = dbase + 2 * j
        perm[dbase + 2 * i + 1] = dbase + 2 * j + 1
    return perm


def check_permutation_isomorphism(L1, L2, perm):
    """f2[perm(i), perm(j)] = perm(f1[i, j]) for every pair, both ways."""
    if L1.dim != L2.dim or len(perm) != L1.dim:
        return False
    for i in range(L1.dim):
        for j in range(i + 1, L1.dim):
            row = {perm[k]: c for k, c in L1.bracket_basis(i, j).items()}
            if row != L2.bracket_basis(perm[i], perm[j]):
                return False
    return True


def check_swap_isomorphism(K, K2):
    """M(K,K') and M(K',K) have matching constants under the swap map."""
    L1 = magic_liealg(K, K2)
    L2 = magic_liealg(K2, K)
    return check_permutation_isomorphism(L1, L2, swap_permutation(K, K2))


def check_r_row_agreement(K2):
    """M(R,K') has exactly the structure constants of der(K') + sa_3(K')
    under the index identification e_j -> 1 (x) e_j."""
    L1 = magic_liealg("R", K2)
    L2 = der_sa3_liealg(factor_algebra(K2))
    return L1.dim == L2.dim and L1.f == L2.f
