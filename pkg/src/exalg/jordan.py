"""Hermitian Jordan matrix algebras over the division algebras.

Elements are n x n matrices over a star-algebra K with entries[j][i] =
entries[i][j]* and real diagonal; hermitianity is enforced at
construction and never assumed.  The matrix convention for n = 3 is

        [ alpha  z*    y* ]
        [ z      beta  x  ]
        [ y      x*    gamma ]

so det3 = alpha beta gamma - (alpha|x|^2 + beta|y|^2 + gamma|z|^2)
+ 2 Re((xy)z), and the trace-1 projections built from a vector (x,y,z)
with (xy)z = x(yz) carry the projective-plane geometry: incidence is
vanishing of the trace pairing tr(a o b), lines through two points come
from the cross product dual to the polarized determinant.

The rank-2 story runs in parallel: h_2(K) is isomorphic to the spin
factor on K + R via
        [ alpha+beta  x          ]
        [ x*          alpha-beta ]   ->   (x, beta, alpha)
with det2 = alpha^2 - beta^2 - |x|^2 = -minkowski(phi a, phi a).

Two variants of the rank-1 projection on h_2 appear because the two
natural displays pair with different fibers: hopf uses right conjugates
[[xx*, xy*], [yx*, yy*]] and is constant on (x,y) ~ (x y^-1, 1), while
hopf_left uses left conjugates [[x*x, x*y], [y*x, y*y]] and is constant
on (x,y) ~ (y^-1 x, 1).
"""

from fractions import Fraction
from math import lcm
import random

from .algebras import Element
from .linalg import Mat, LinearSystem, invert
from .liealg import build_from_operators

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_element(algebra, x):
    if isinstance(x, Element):
        if x.algebra is not algebra:
            raise ValueError("entry from a different algebra")
        return x
    return algebra.scalar(Fraction(x))


class JordanElement:
    """Hermitian n x n matrix over a star-algebra; rejects non-hermitian
    input at construction."""

    __slots__ = ("algebra", "n", "entries")

    def __init__(self, algebra, entries, check=True):
        self.algebra = algebra
        self.n = len(entries)
        rows = []
        for r in entries:
            if len(r) != self.n:
                raise ValueError("entries must be square")
            rows.append(tuple(_as_element(algebra, x) for x in r))
        self.entries = tuple(rows)
        if check:
            for i in range(self.n):
                if not self.entries[i][i].scalar_part_only():
                    raise ValueError("diagonal entry %d is not real" % i)
                for j in range(i + 1, self.n):
                    if self.entries[j][i] != self.entries[i][j].conjugate():
                        raise ValueError(
                            "not hermitian at (%d,%d)" % (i, j))

    def __eq__(self, other):
        return (isinstance(other, JordanElement)
                and self.algebra is other.algebra and self.n == other.n
                and self.entries == other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __add__(self, other):
        return JordanElement(self.algebra,
                             [[a + b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.entries, other.entries)],
                             check=False)

    def __sub__(self, other):
        return JordanElement(self.algebra,
                             [[a - b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.entries, other.entries)],
                             check=False)

    def __neg__(self):
        return JordanElement(self.algebra,
                             [[-a for a in r] for r in self.entries],
                             check=False)

    def scale(self, c):
        c = Fraction(c)
        return JordanElement(self.algebra,
                             [[c * a for a in r] for r in self.entries],
                             check=False)

    def __rmul__(self, c):
        return self.scale(c)

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def is_zero(self):
        return all(a.is_zero() for r in self.entries for a in r)

    def trace(self):
        return sum(self.entries[i][i].re() for i in range(self.n))

    def __repr__(self):
        return "JordanElement(%s, n=%d)" % (self.algebra.name, self.n)


def matmul_entries(a, b):
    """Raw (non-hermitian) matrix product grid of two JordanElements."""
    n = a.n
    return [[sum((a.entries[i][k] * b.entries[k][j] for k in range(n)),
                 a.algebra.zero()) for j in range(n)] for i in range(n)]


def jordan_product(a, b):
    """a o b = (ab + ba)/2; the result's hermitianity is re-checked."""
    if a.algebra is not b.algebra or a.n != b.n:
        raise ValueError("shape or algebra mismatch")
    p = matmul_entries(a, b)
    q = matmul_entries(b, a)
    return JordanElement(a.algebra,
                         [[(p[i][j] + q[i][j]) / 2 for j in range(a.n)]
                          for i in range(a.n)])


def jordan_identity_element(algebra, n):
    one, zero = algebra.one(), algebra.zero()
    return JordanElement(algebra, [[one if i == j else zero
                                    for j in range(n)] for i in range(n)])


def jordan_zero(algebra, n):
    z = algebra.zero()
    return JordanElement(algebra, [[z] * n for _ in range(n)])


def diag(algebra, scalars):
    zero = algebra.zero()
    n = len(scalars)
    return JordanElement(algebra,
                         [[algebra.scalar(Fraction(scalars[i])) if i == j
                           else zero for j in range(n)] for i in range(n)])


def _positions(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def jordan_basis(algebra, n):
    """Diagonal units E_ii, then off-diagonal F_ij(u) position-major over
    the algebra's basis units u: F has u at (i,j) and u* at (j,i)."""
    zero = algebra.zero()
    out = []
    for i in range(n):
        grid = [[zero] * n for _ in range(n)]
        grid[i][i] = algebra.one()
        out.append(JordanElement(algebra, grid))
    for (i, j) in _positions(n):
        for u in range(algebra.dim):
            grid = [[zero] * n for _ in range(n)]
            grid[i][j] = algebra.basis(u)
            grid[j][i] = algebra.basis(u).conjugate()
            out.append(JordanElement(algebra, grid))
    return out


def jordan_dim(algebra, n):
    return n + len(_positions(n)) * algebra.dim


def jordan_coords(a):
    """Coordinates in the jordan_basis order, read directly off entries."""
    out = [a.entries[i][i].re() for i in range(a.n)]
    for (i, j) in _positions(a.n):
        out.extend(a.entries[i][j].coords)
    return out


def from_jordan_coords(algebra, n, vec):
    vec = [Fraction(x) for x in vec]
    zero = algebra.zero()
    grid = [[zero] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = algebra.scalar(vec[i])
    pos = n
    for (i, j) in _positions(n):
        x = algebra.element(vec[pos:pos + algebra.dim])
        grid[i][j] = x
        grid[j][i] = x.conjugate()
        pos += algebra.dim
    return JordanElement(algebra, grid)


def random_jordan_element(algebra, n, rng, span=9, maxden=3):
    d = jordan_dim(algebra, n)
    return from_jordan_coords(algebra, n,
                              [Fraction(rng.randint(-span, span),
                                        rng.randint(1, maxden))
                               for _ in range(d)])


_table_cache = {}


def jordan_mult_table(algebra, n):
    """Sparse structure constants of o in the jordan_basis: {(i,j): {k: c}}
    for i <= j (symmetric product)."""
    key = (id(algebra), n)
    if key not in _table_cache:
        basis = jordan_basis(algebra, n)
        d = len(basis)
        table = {}
        for i in range(d):
            for j in range(i, d):
                cs = jordan_coords(jordan_product(basis[i], basis[j]))
                row = {k: c for k, c in enumerate(cs) if c}
                if row:
                    table[(i, j)] = row
        _table_cache[key] = (basis, table)
    return _table_cache[key]


def l_operator_matrix(a):
    """Matrix of b -> a o b on the jordan_basis coordinates."""
    basis, _ = jordan_mult_table(a.algebra, a.n)
    cols = [jordan_coords(jordan_product(a, b)) for b in basis]
    return Mat([[cols[j][i] for j in range(len(basis))]
                for i in range(len(basis))])


def trace3(a):
    """Trace of a rank-3 element; equals (1/9) tr(L_a) on h_3(O)."""
    if a.n != 3:
        raise ValueError("trace3 needs n = 3")
    return a.trace()


def det3(a):
    """alpha beta gamma - (alpha|x|^2 + beta|y|^2 + gamma|z|^2) + 2Re((xy)z).

    x, y, z are the off-diagonal entries read cyclically: x = a[1][2],
    y = a[2][0], z = a[0][1], so xyz is the product once around the loop
    1 -> 2 -> 0 -> 1.  That reading is forced: it is the unique one whose
    formula agrees with the basis-free cubic-trace expression
    det(a) = (1/3)tr(a^3) - (1/2)tr(a^2)tr(a) + (1/6)tr(a)^3.
    """
    if a.n != 3:
        raise ValueError("det3 needs n = 3")
    alpha = a.entries[0][0].re()
    beta = a.entries[1][1].re()
    gamma = a.entries[2][2].re()
    z = a.entries[0][1]
    y = a.entries[2][0]
    x = a.entries[1][2]
    return (alpha * beta * gamma
            - (alpha * x.norm_sq() + beta * y.norm_sq() + gamma * z.norm_sq())
            + 2 * ((x * y) * z).re())


def det2(a):
    """alpha^2 - beta^2 - |x|^2 for [[alpha+beta, x],[x*, alpha-beta]]."""
    if a.n != 2:
        raise ValueError("det2 needs n = 2")
    alpha = (a.entries[0][0].re() + a.entries[1][1].re()) / 2
    beta = (a.entries[0][0].re() - a.entries[1][1].re()) / 2
    return alpha * alpha - beta * beta - a.entries[0][1].norm_sq()


def polarize_det(a, b, c):
    """The symmetric trilinear form with (a,a,a) = det3(a)."""
    return (det3(a + b + c) - det3(a + b) - det3(a + c) - det3(b + c)
            + det3(a) + det3(b) + det3(c)) / 6


_gram_cache = {}


def _gram_inverse(algebra, n):
    key = (id(algebra), n)
    if key not in _gram_cache:
        basis, _ = jordan_mult_table(algebra, n)
        d = len(basis)
        g = Mat([[jordan_product(basis[i], basis[j]).trace()
                  for j in range(d)] for i in range(d)])
        _gram_cache[key] = (basis, invert(g))
    return _gram_cache[key]


_pair_tensor_cache = {}


def _pair_tensor(algebra):
    """pairmap[(i<=j)] = {k: (e_i,e_j,e_k)} of the polarized determinant,
    cached; lets cross() run as a sparse contraction."""
    key = id(algebra)
    if key not in _pair_tensor_cache:
        _, p = _polarized_tensor(algebra)
        pairmap = {}
        for (i, j, k), val in p.items():
            pairs = {(i, j): k, (i, k): j, (j, k): i}
            for (a, b), c in pairs.items():
                pairmap.setdefault((a, b), {})[c] = val
        _pair_tensor_cache[key] = pairmap
    return _pair_tensor_cache[key]


def cross(a, b):
    """Freudenthal cross product: tr((a x b) o c) = (a,b,c) for all c."""
    basis, ginv = _gram_inverse(a.algebra, 3)
    pairmap = _pair_tensor(a.algebra)
    ca = jordan_coords(a)
    cb = jordan_coords(b)
    d = len(basis)
    rhs = [_F0] * d
    for i in range(d):
        for j in range(i, d):
            c = ca[i] * cb[j] + ca[j] * cb[i] if i != j else ca[i] * cb[i]
            if not c:
                continue
            for k, val in pairmap.get((i, j), {}).items():
                rhs[k] += c * val
    return from_jordan_coords(a.algebra, 3, ginv.apply(rhs))


def _cleared(a):
    """An integer-cleared positive multiple of a.

    The projective predicates (projection identity, incidence pairing,
    collinearity form, rank-1 criterion) are all homogeneous, so they
    may be evaluated on the cleared representative, where rational
    arithmetic is much cheaper than on trace-normalized entries.
    """
    s = 1
    for r in a.entries:
        for x in r:
            for c in x.coords:
                s = lcm(s, c.denominator)
    return a if s == 1 else a.scale(s)


class ProjectivePoint:
    """Trace-1 projection in h_3; construction verifies p o p = p,
    tr p = 1, and the rank-1 criterion p x p = 0."""

    __slots__ = ("rep",)

    def __init__(self, rep, check=True):
        if check:
            if rep.trace() != 1:
                raise ValueError("trace is not 1")
            # validate on the cleared multiple w = s*rep:
            # p o p = p iff w o w = s*w, and p x p = 0 iff w x w = 0
            w = _cleared(rep)
            s = w.trace()
            if jordan_product(w, w) != w.scale(s):
                raise ValueError("not a projection")
            if not cross(w, w).is_zero():
                raise ValueError("rank-1 criterion p x p = 0 fails")
        self.rep = rep

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.rep == other.rep

    def __ne__(self, other):
        return not self.__eq__(other)


def point_from_vector(x, y, z):
    """Projection [[xx*, xy*, xz*], ...] / (|x|^2+|y|^2+|z|^2).

    Requires (xy)z = x(yz) exactly (associating triple) and a nonzero
    vector; both violations are hard errors.
    """
    v = (x, y, z)
    algebra = x.algebra
    if all(c.is_zero() for c in v):
        raise ValueError("zero vector gives no point")
    if (x * y) * z != x * (y * z):
        raise ValueError("(xy)z != x(yz): vector does not give a point")
    norm = sum(c.norm_sq() for c in v)
    grid = [[(v[i] * v[j].conjugate()) / norm for j in range(3)]
            for i in range(3)]
    return ProjectivePoint(JordanElement(algebra, grid))


def incident(p, ell):
    """Point p lies on line ell iff tr(ell o p) = 0."""
    return jordan_product(_cleared(p.rep), _cleared(ell.rep)).trace() == 0


def collinear(p, q, r):
    return polarize_det(_cleared(p.rep), _cleared(q.rep),
                        _cleared(r.rep)) == 0


def line_through(p, q):
    """The line joining two distinct points, as a trace-1 element."""
    c = cross(_cleared(p.rep), _cleared(q.rep))
    t = c.trace()
    if c.is_zero() or t == 0:
        raise ValueError("points do not span a line")
    return ProjectivePoint(c / t)


def hopf(x, y):
    """[[xx*, xy*],[yx*, yy*]] / (|x|^2+|y|^2): a trace-1 projection,
    constant on the fibers (x,y) ~ (x y^-1, 1)."""
    if x.is_zero() and y.is_zero():
        raise ValueError("zero vector gives no point")
    norm = x.norm_sq() + y.norm_sq()
    grid = [[(x * x.conjugate()) / norm, (x * y.conjugate()) / norm],
            [(y * x.conjugate()) / norm, (y * y.conjugate()) / norm]]
    p = JordanElement(x.algebra, grid)
    if jordan_product(p, p) != p or p.trace() != 1 or det2(p) != 0:
        raise ValueError("projection verification failed")
    return p


def hopf_left(x, y):
    """[[x*x, x*y],[y*x, y*y]] / (|x|^2+|y|^2): same geometry with left
    conjugates, constant on the fibers (x,y) ~ (y^-1 x, 1)."""
    if x.is_zero() and y.is_zero():
        raise ValueError("zero vector gives no point")
    norm = x.norm_sq() + y.norm_sq()
    xc, yc = x.conjugate(), y.conjugate()
    grid = [[(xc * x) / norm, (xc * y) / norm],
            [(yc * x) / norm, (yc * y) / norm]]
    p = JordanElement(x.algebra, grid)
    if jordan_product(p, p) != p or p.trace() != 1 or det2(p) != 0:
        raise ValueError("projection verification failed")
    return p


def _random_entry(algebra, rng, span=4):
    coords = [Fraction(rng.randint(-span, span)) for _ in range(algebra.dim)]
    return algebra.element(coords)


def random_point(algebra, rng, span=4):
    """A seeded random projective point from a vector (x, y, 1).

    The trailing 1 makes the triple associate for any x, y, so the
    construction never hits the (xy)z != x(yz) error.
    """
    while True:
        x = _random_entry(algebra, rng, span)
        y = _random_entry(algebra, rng, span)
        if not (x.is_zero() and y.is_zero()):
            return point_from_vector(x, y, algebra.scalar(1))


def projective_axiom_suite(algebra, samples=200, seed=42):
    """Incidence-geometry checks on seeded random points of the plane.

    Every constructed point is revalidated (p o p = p, tr p = 1,
    p x p = 0) by the ProjectivePoint constructor.  For random pairs
    p != q the joining line ell = [p x q] contains both, r = p and
    r = q are collinear with (p, q), and for a random third point r
    collinearity (p,q,r) = 0 holds iff r is incident with ell; the
    trace pairing makes incidence symmetric.  Returns a report dict.
    """
    rng = random.Random(seed)
    report = {"pass": True, "samples": samples, "seed": seed,
              "items": {}, "witness": None}

    def item(name, ok, witness=None):
        report["items"][name] = bool(ok)
        if not ok:
            report["pass"] = False
            if report["witness"] is None:
                report["witness"] = (name, witness)

    d1 = diag(algebra, [1, 0, 0])
    d2 = diag(algebra, [0, 1, 0])
    p1, p2 = ProjectivePoint(d1), ProjectivePoint(d2)
    item("diag(1,0,0) on line diag(0,1,0)", incident(p1, p2))
    item("diag(1,0,0) not on itself", not incident(p1, p1))

    built = joins = equiv = symm = degen = unique = True
    wit = None
    for trial in range(samples):
        try:
            p = random_point(algebra, rng)
            q = random_point(algebra, rng)
            r = random_point(algebra, rng)
        except ValueError as exc:
            built = False
            wit = str(exc)
            break
        if p == q:
            continue
        ell = line_through(p, q)
        if not (incident(p, ell) and incident(q, ell)):
            joins = False
            wit = trial
            break
        if not (collinear(p, q, p) and collinear(p, q, q)):
            degen = False
            wit = trial
            break
        if collinear(p, q, r) != incident(r, ell):
            equiv = False
            wit = trial
            break
        if incident(r, ell) != incident(ell, r):
            symm = False
            wit = trial
            break
        # r generic: a second point pair joins to a different line
        if r != p and r != q:
            ell2 = line_through(q, r)
            if incident(p, ell2) and ell2 != ell:
                unique = False
                wit = trial
                break
    item("random points construct and revalidate", built, wit)
    item("line through p, q contains both", joins, wit)
    item("p and q are collinear with (p, q)", degen, wit)
    item("collinear(p,q,r) = 0 iff r on [p x q]", equiv, wit)
    item("incidence pairing is symmetric", symm, wit)
    item("joining line unique among sampled lines", unique, wit)
    return report


class SpinFactorElement:
    """(v, alpha) with product (v,a)(w,b) = (aw + bv, <v,w> + ab)."""

    __slots__ = ("v", "alpha")

    def __init__(self, v, alpha):
        self.v = tuple(Fraction(x) for x in v)
        self.alpha = Fraction(alpha)

    def __eq__(self, other):
        return (isinstance(other, SpinFactorElement)
                and self.v == other.v and self.alpha == other.alpha)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __add__(self, other):
        return SpinFactorElement([a + b for a, b in zip(self.v, other.v)],
                                 self.alpha + other.alpha)

    def __repr__(self):
        return "SpinFactorElement(%s, %s)" % (list(self.v), self.alpha)


def spin_product(a, b):
    if len(a.v) != len(b.v):
        raise ValueError("spatial dimension mismatch")
    spatial = [a.alpha * w + b.alpha * v for v, w in zip(a.v, b.v)]
    return SpinFactorElement(spatial,
                             sum(x * y for x, y in zip(a.v, b.v))
                             + a.alpha * b.alpha)


def minkowski(a, b):
    """<v,w> - alpha beta: the polarized form with det2(a) = -minkowski(phi a, phi a)."""
    return sum(x * y for x, y in zip(a.v, b.v)) - a.alpha * b.alpha


def h2_iso(a):
    """[[alpha+beta, x],[x*, alpha-beta]] -> (x, beta, alpha) in K + R + R."""
    if a.n != 2:
        raise ValueError("h2_iso needs n = 2")
    alpha = (a.entries[0][0].re() + a.entries[1][1].re()) / 2
    beta = (a.entries[0][0].re() - a.entries[1][1].re()) / 2
    return SpinFactorElement(list(a.entries[0][1].coords) + [beta], alpha)


def h2_iso_check(algebra):
    """phi(a o b) = phi(a) o phi(b) on every pair of h_2 basis elements."""
    basis = jordan_basis(algebra, 2)
    for a in basis:
        for b in basis:
            if h2_iso(jordan_product(a, b)) != spin_product(h2_iso(a),
                                                            h2_iso(b)):
                return False
    return True


def signed_perm_conjugations():
    """The 48 maps a -> g a g^T for signed 3x3 permutation matrices g,
    as (perm, signs) pairs."""
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    out = []
    for p in perms:
        for s0 in (1, -1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    out.append((p, (s0, s1, s2)))
    return out


def conjugate_by_signed_perm(a, perm, signs):
    """(g a g^T)_{ij} = s_i s_j a_{perm(i) perm(j)}."""
    grid = [[signs[i] * signs[j] * a.entries[perm[i]][perm[j]]
             for j in range(a.n)] for i in range(a.n)]
    return JordanElement(a.algebra, grid)


_poltensor_cache = {}


def _polarized_tensor(algebra):
    """(basis, P) with P[(i<=j<=k)] = (e_i, e_j, e_k), via cached dets."""
    key = id(algebra)
    if key in _poltensor_cache:
        return _poltensor_cache[key]
    basis = jordan_basis(algebra, 3)
    d = len(basis)
    d1 = [det3(e) for e in basis]
    d2 = {}
    for i in range(d):
        for j in range(i, d):
            d2[(i, j)] = det3(basis[i] + basis[j])
    p = {}
    for i in range(d):
        for j in range(i, d):
            eij = basis[i] + basis[j]
            for k in range(j, d):
                val = (det3(eij + basis[k]) - d2[(i, j)] - d2[(i, k)]
                       - d2[(j, k)] + d1[i] + d1[j] + d1[k])
                if val:
                    p[(i, j, k)] = val / 6
    _poltensor_cache[key] = (basis, p)
    return basis, p


def _p_lookup(p, i, j, k):
    return p.get(tuple(sorted((i, j, k))), _F0)


def det_preserving_liealg(algebra, n, name=None):
    """Lie algebra of operators T with the polarized determinant killed:
    n=3: (Ta,b,c) + (a,Tb,c) + (a,b,Tc) = 0 over all basis multisets;
    n=2: B(Ta,b) + B(a,Tb) = 0 with B the polarized det2 (Minkowski) form.
    """
    if name is None:
        name = "det%d_inv(h%d(%s))" % (n, n, algebra.name)
    if n == 3:
        basis, p = _polarized_tensor(algebra)
        d = len(basis)
        # pvec[(j<=k)] = {s: (e_s, e_j, e_k)}
        pvec = {}
        for (i, j, k), val in p.items():
            pvec.setdefault((j, k), {})[i] = val
            if i != j:
                pvec.setdefault((i, k), {})[j] = val
            if j != k:
                pvec.setdefault((i, j), {})[k] = val
        sys = LinearSystem(d * d)
        for i in range(d):
            for j in range(i, d):
                for k in range(j, d):
                    row = {}
                    for (slot, jj, kk) in ((i, j, k), (j, i, k), (k, i, j)):
                        for s, val in pvec.get((jj, kk), {}).items():
                            col = s * d + slot
                            row[col] = row.get(col, _F0) + val
                    if row:
                        sys.add_row(row)
    elif n == 2:
        basis = jordan_basis(algebra, 2)
        d = len(basis)
        dets = [det2(e) for e in basis]
        b = [[(det2(basis[i] + basis[j]) - dets[i] - dets[j]) / 2
              for j in range(d)] for i in range(d)]
        sys = LinearSystem(d * d)
        for i in range(d):
            for j in range(i, d):
                row = {}
                for s in range(d):
                    if b[s][j]:
                        row[s * d + i] = row.get(s * d + i, _F0) + b[s][j]
                    if b[s][i]:
                        row[s * d + j] = row.get(s * d + j, _F0) + b[s][i]
                if row:
                    sys.add_row(row)
    else:
        raise ValueError("n must be 2 or 3")
    kernel = sys.nullspace()
    mats = [Mat([[v[r * d + c] for c in range(d)] for r in range(d)])
            for v in kernel]
    labels = ["T%d" % i for i in range(len(mats))]
    return build_from_operators(mats, name, labels)


def formally_real_spot_check(algebra, n, samples=200, seed=42):
    """Nonzero tuples have sum of squares nonzero with positive trace."""
    rng = random.Random(seed)
    for _ in range(samples):
        els = [random_jordan_element(algebra, n, rng)
               for _ in range(rng.randint(1, 4))]
        if all(e.is_zero() for e in els):
            continue
        s = jordan_zero(algebra, n)
        for e in els:
            s = s + jordan_product(e, e)
        if s.is_zero() or s.trace() <= 0:
            return False
    return True
