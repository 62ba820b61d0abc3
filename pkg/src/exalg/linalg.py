"""Exact rational linear algebra.

Everything downstream (derivation solving, Killing signatures, kernel
computations) runs through this module, and every result is exact: scalars
are `fractions.Fraction`, eliminations are fraction-free over the integers,
and numpy is used only as an int64 accelerator behind explicit overflow
bounds.

The two workhorses:

* `LinearSystem` / `nullspace` -- streamed kernel computation.  Rows are
  integer-scaled and buffered; a deterministic mod-p elimination picks a
  maximal independent row subset (independence mod p implies independence
  over Q, so this step needs no trust); exact fraction-free elimination runs
  on that subset only; finally every buffered row is re-checked exactly
  against the kernel basis, which certifies the rank from both sides.  Any
  row the prescreen misjudged (vanishingly unlikely, but possible since p is
  finite) fails that check and is promoted into the exact elimination, so
  the result never depends on luck.

* `ldlt_signature` -- Sylvester signature of a symmetric rational matrix by
  fraction-free symmetric elimination with diagonal pivoting.
"""

from fractions import Fraction
from math import gcd

import numpy as np

# prime below 2^20: mod-p products stay under 2^40, so int64 dot products
# over <= 2^23 columns cannot overflow
_P = 1048573

_INT64_SAFE = 1 << 62


def rat_str(x):
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_rat(s):
    """Inverse of rat_str."""
    return Fraction(s)


def scale_to_ints(vec):
    """Return (ints, den) with vec[i] = ints[i] / den exactly, den > 0."""
    den = 1
    for x in vec:
        if isinstance(x, Fraction):
            d = x.denominator
            den = den // gcd(den, d) * d
    out = []
    for x in vec:
        if isinstance(x, Fraction):
            out.append(x.numerator * (den // x.denominator))
        else:
            out.append(int(x) * den)
    return out, den


def _row_content(d):
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _normalize_row(d):
    """Divide out the integer content of a sparse row, in place."""
    g = _row_content(d)
    if g > 1:
        for c in d:
            d[c] //= g
    return d


def int_matmul(a, b):
    """Exact product of two integer matrices (lists of lists).

    Uses numpy int64 when the worst-case entry provably fits, otherwise
    falls back to big-int Python arithmetic.
    """
    n_inner = len(b)
    if n_inner == 0 or not a:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    max_a = max((abs(x) for row in a for x in row), default=0)
    max_b = max((abs(x) for row in b for x in row), default=0)
    if max_a and max_b and n_inner * max_a * max_b < _INT64_SAFE:
        prod = np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)
        return [[int(x) for x in row] for row in prod]
    # big-int path
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt]
            for row in a]


class Mat:
    """Dense exact matrix over Fraction.  Immutable by convention."""

    __slots__ = ("rows", "m", "n", "_ints")

    def __init__(self, rows):
        self.rows = [[x if isinstance(x, Fraction) else Fraction(x) for x in r]
                     for r in rows]
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        self._ints = None

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (self.m, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __add__(self, other):
        return Mat([[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def scaled_ints(self):
        """(int rows, den): self = ints / den."""
        if self._ints is None:
            den = 1
            for r in self.rows:
                for x in r:
                    d = x.denominator
                    den = den // gcd(den, d) * d
            ints = [[x.numerator * (den // x.denominator) for x in r]
                    for r in self.rows]
            self._ints = (ints, den)
        return self._ints

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.n != other.m:
                raise ValueError("shape mismatch")
            ai, da = self.scaled_ints()
            bi, db = other.scaled_ints()
            prod = int_matmul(ai, bi)
            d = da * db
            return Mat([[Fraction(x, d) for x in row] for row in prod])
        c = other if isinstance(other, Fraction) else Fraction(other)
        return Mat([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def apply(self, vec):
        """Matrix-vector product, vec a sequence of rationals."""
        return [sum(a * x for a, x in zip(r, vec) if a) for r in self.rows]

    def transpose(self):
        return Mat([list(col) for col in zip(*self.rows)])

    def trace(self):
        return sum(self.rows[i][i] for i in range(min(self.m, self.n)))

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def flat(self):
        return [x for r in self.rows for x in r]

    def __repr__(self):
        return "Mat(%d x %d)" % (self.m, self.n)


def commutator(a, b):
    return a * b - b * a


class LinearSystem:
    """Streamed exact kernel solver over Q.

    add_row() accepts either a dense sequence or a {col: value} dict of
    ints/Fractions.  solve() returns (rank, basis) where basis is the kernel
    in reduced echelon form: basis vector k has a 1 in its own free column
    and 0 in every other free column, so the output is canonical.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = []          # sparse int rows, insertion order
        self._solved = None

    def add_row(self, row):
        if isinstance(row, dict):
            items = sorted(row.items())
            vals, _ = scale_to_ints([v for _, v in items])
            d = {c: v for (c, _), v in zip(items, vals) if v}
        else:
            vals, _ = scale_to_ints(list(row))
            d = {c: v for c, v in enumerate(vals) if v}
        if d:
            _normalize_row(d)
            self._rows.append(d)
        self._solved = None

    # -- mod-p prescreen ---------------------------------------------------

    def _prescreen(self):
        """Deterministic mod-p RREF over the buffered rows.

        Returns indices of the selected (independent mod p) rows.  The
        pivot matrix is kept fully reduced so each incoming row needs one
        vectorized matvec.
        """
        n = self.ncols
        piv_rows = np.zeros((0, n), dtype=np.int64)
        piv_cols = []
        selected = []
        for idx, row in enumerate(self._rows):
            r = np.zeros(n, dtype=np.int64)
            for c, v in row.items():
                r[c] = v % _P
            if piv_cols:
                coeffs = r[piv_cols]
                if coeffs.any():
                    r = (r - coeffs @ piv_rows) % _P
            nz = np.flatnonzero(r)
            if nz.size == 0:
                continue
            c0 = int(nz[0])
            inv = pow(int(r[c0]), _P - 2, _P)
            r = (r * inv) % _P
            if piv_cols:
                col = piv_rows[:, c0].copy()
                if col.any():
                    piv_rows = (piv_rows - np.outer(col, r)) % _P
            piv_rows = np.vstack([piv_rows, r])
            piv_cols.append(c0)
            selected.append(idx)
        return selected

    # -- exact elimination -------------------------------------------------

    @staticmethod
    def _insert_exact(pivots, row):
        """Reduce a sparse int row against pivot rows; install if nonzero.

        pivots: {col: row-dict} with each row's minimum column as key.
        Fraction-free: r' = (b/g) r - (a/g) p keeps everything integral.
        """
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                _normalize_row(row)
                pivots[c] = row
                return c
            a = row[c]
            b = p[c]
            g = gcd(a, b)
            mr = b // g
            mp = a // g
            new = {}
            for cc, v in row.items():
                new[cc] = v * mr
            for cc, v in p.items():
                w = new.get(cc, 0) - v * mp
                if w:
                    new[cc] = w
                elif cc in new:
                    del new[cc]
            row = new
            if row:
                _normalize_row(row)
        return None

    def _kernel_from_pivots(self, pivots):
        """Back-substitute one kernel vector per free column (exact)."""
        piv_cols = sorted(pivots)
        piv_set = set(piv_cols)
        free_cols = [c for c in range(self.ncols) if c not in piv_set]
        basis = []
        for f in free_cols:
            v = {f: Fraction(1)}
            for pc in reversed(piv_cols):
                row = pivots[pc]
                s = Fraction(0)
                for c, coef in row.items():
                    if c == pc:
                        continue
                    x = v.get(c)
                    if x is not None:
                        s += coef * x
                if s:
                    v[pc] = -s / row[pc]
            basis.append(tuple(v.get(c, Fraction(0)) for c in range(self.ncols)))
        return basis

    def _verify_failures(self, basis):
        """Indices of buffered rows that do not annihilate the basis."""
        if not basis:
            return []
        # scale kernel vectors to ints and try one numpy matmul
        kint = []
        for v in basis:
            ints, _ = scale_to_ints(v)
            kint.append(ints)
        kcols = list(zip(*kint))  # ncols x dim(kernel)
        bad = []
        max_k = max((abs(x) for r in kint for x in r), default=0)
        dense_ok = self.ncols <= 4096 and len(self._rows) * self.ncols <= 50_000_000
        if dense_ok:
            max_r = max((abs(v) for row in self._rows for v in row.values()),
                        default=0)
            if max_r and max_k and self.ncols * max_r * max_k < _INT64_SAFE:
                a = np.zeros((len(self._rows), self.ncols), dtype=np.int64)
                for i, row in enumerate(self._rows):
                    for c, v in row.items():
                        a[i, c] = v
                prod = a @ np.array(kint, dtype=np.int64).T
                return [int(i) for i in np.flatnonzero(prod.any(axis=1))]
        for i, row in enumerate(self._rows):
            for j in range(len(kint)):
                if sum(v * kcols[c][j] for c, v in row.items()) != 0:
                    bad.append(i)
                    break
        return bad

    def solve(self):
        if self._solved is not None:
            return self._solved
        selected = self._prescreen()
        chosen = set(selected)
        while True:
            pivots = {}
            for i in sorted(chosen):
                self._insert_exact(pivots, self._rows[i])
            basis = self._kernel_from_pivots(pivots)
            bad = [i for i in self._verify_failures(basis) if i not in chosen]
            if not bad:
                break
            # prescreen missed these rows; they are provably independent of
            # the chosen set, so promote them and re-eliminate
            chosen.update(bad)
        self._solved = (len(pivots), basis)
        return self._solved

    def rank(self):
        return self.solve()[0]

    def nullspace(self):
        return self.solve()[1]


def nullspace(rows, ncols=None):
    """Kernel basis of a matrix given as an iterable of rows."""
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("empty system needs explicit ncols")
        first = rows[0]
        ncols = (max(first) + 1) if isinstance(first, dict) else len(first)
    sys_ = LinearSystem(ncols)
    for r in rows:
        sys_.add_row(r)
    return sys_.nullspace()


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        first = rows[0]
        ncols = (max(first) + 1) if isinstance(first, dict) else len(first)
    sys_ = LinearSystem(ncols)
    for r in rows:
        sys_.add_row(r)
    return sys_.rank()


def coords_in_reduced_basis(basis, vec):
    """Coordinates of vec in a reduced-echelon basis, or None.

    basis comes from nullspace(): vector k is 1 at its own free column and
    0 at the others, so the candidate coordinates can be read off and then
    verified exactly.
    """
    if not basis:
        return None
    unit_cols = []
    ncols = len(basis[0])
    for k, b in enumerate(basis):
        col = None
        for c in range(ncols):
            if b[c] == 1 and all(basis[j][c] == 0 for j in range(len(basis)) if j != k):
                col = c
                break
        if col is None:
            return None
        unit_cols.append(col)
    coords = [vec[c] for c in unit_cols]
    for c in range(ncols):
        s = sum(coords[k] * basis[k][c] for k in range(len(basis)))
        if s != vec[c]:
            return None
    return coords


class ReducedBasis:
    """Fast coordinate extraction against a reduced-echelon basis.

    Built from nullspace() output (or any basis where each vector owns a
    unit column).  coords() reads candidate coordinates off the unit
    columns; with verify=True it also checks the combination reproduces the
    vector exactly.  Callers doing bulk extraction can skip per-call
    verification and run verify_batch() once at the end.
    """

    def __init__(self, basis):
        self.basis = [tuple(v) for v in basis]
        self.k = len(self.basis)
        self.n = len(self.basis[0]) if self.basis else 0
        self.unit_cols = []
        for i, b in enumerate(self.basis):
            col = None
            for c in range(self.n):
                if b[c] == 1 and all(self.basis[j][c] == 0
                                     for j in range(self.k) if j != i):
                    col = c
                    break
            if col is None:
                raise ValueError("basis is not in reduced echelon form")
            self.unit_cols.append(col)
        # columns where some basis vector is nonzero, for sparse verify
        self._support = [c for c in range(self.n)
                         if any(b[c] for b in self.basis)]

    def coords(self, vec, verify=True):
        """Coordinates of vec in the basis; None if vec is not in the span.

        With verify=False the caller promises vec is in the span (say,
        because a later batch check covers it); only the unit columns are
        read.
        """
        cs = [vec[c] for c in self.unit_cols]
        if verify:
            for c in range(self.n):
                s = sum(cs[k] * self.basis[k][c] for k in range(self.k) if cs[k])
                if s != vec[c]:
                    return None
        return cs

    def verify_batch(self, vecs, coord_rows):
        """Exact check that every vecs[i] equals coord_rows[i] . basis."""
        for vec, cs in zip(vecs, coord_rows):
            for c in range(self.n):
                s = sum(cs[k] * self.basis[k][c] for k in range(self.k) if cs[k])
                if s != vec[c]:
                    return False
        return True


def invert(mat):
    """Exact inverse of a square Mat via Gauss-Jordan."""
    n = mat.m
    if n != mat.n:
        raise ValueError("not square")
    a = [list(r) for r in mat.rows]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        pv = a[col][col]
        if pv != 1:
            a[col] = [x / pv for x in a[col]]
            inv[col] = [x / pv for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return Mat(inv)


def ldlt_signature(mat):
    """(n_pos, n_neg, n_zero) of a symmetric rational matrix.

    Fraction-free symmetric elimination: after k steps the (k,k) entry is
    the order-(k+1) leading principal minor of the (symmetrically pivoted)
    matrix, so the signature is read off the sign changes in the minor
    sequence (Jacobi's criterion).  When the remaining diagonal vanishes
    but the block does not, a row+column addition (a congruence, which
    preserves signature) manufactures a nonzero pivot.
    """
    rows = mat.rows if isinstance(mat, Mat) else [list(r) for r in mat]
    n = len(rows)
    if n == 0:
        return (0, 0, 0)
    if any(len(r) != n for r in rows):
        raise ValueError("not square")
    flat, _ = scale_to_ints([x for r in rows for x in r])
    a = [flat[i * n:(i + 1) * n] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("not symmetric")

    minors = []          # nonzero leading minors of the congruent matrix
    prev = 1
    k = 0
    while k < n:
        piv = None
        for i in range(k, n):
            if a[i][i] != 0:
                piv = i
                break
        if piv is None:
            # look for any nonzero off-diagonal entry in the block
            loc = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        loc = (i, j)
                        break
                if loc:
                    break
            if loc is None:
                break  # remaining block is zero
            i, j = loc
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r in range(n):
                a[r][k], a[r][piv] = a[r][piv], a[r][k]
        # fraction-free Schur update of the trailing block
        akk = a[k][k]
        row_k = a[k]
        for r in range(k + 1, n):
            ark = a[r][k]
            row_r = a[r]
            for s in range(k + 1, n):
                row_r[s] = (akk * row_r[s] - ark * row_k[s]) // prev
        prev = akk
        minors.append(akk)  # pivot value = leading minor in Bareiss scaling
        k += 1

    # sign changes in 1, M_1, ..., M_r
    n_neg = 0
    last = 1
    for m in minors:
        if (m > 0) != (last > 0):
            n_neg += 1
        last = m
    r = len(minors)
    return (r - n_neg, n_neg, n - r)
