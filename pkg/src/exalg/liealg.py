"""Lie algebras by structure constants: Jacobi checking, Killing forms,
centers, and JSON import/export.

Structure constants are stored sparsely as {(i,j): {k: coeff}} for i < j
only; antisymmetry is structural.  The Jacobi identity is checked exactly
in one of three modes:

  full      every unordered basis pair (i,j) is verified against all k at
            once through the matrix identity
                -(ad w)              (w = [e_i, e_j], as columns over k)
                - ad_i ad_j + ad_j ad_i  = 0,
            equivalent to the triple identity for every (i,j,k);
  sampled   seeded random basis triples, each verified directly;
  budgeted  the full pair sweep with a wall-clock budget; stops cleanly
            and reports partial coverage when time runs out.

All heavy arithmetic runs on a common-denominator integer scaling of the
constants; numpy int64 is used only when the worst-case dot product
provably fits (n * max^2 < 2^62), otherwise big-int Python paths take
over.  Either way every comparison is exact.
"""

from fractions import Fraction
import math
import random
import time

try:
    import numpy as _np
except ImportError:        # pragma: no cover
    _np = None

from .linalg import (Mat, LinearSystem, ReducedBasis, ldlt_signature,
                     rat_str, parse_rat)

_INT64_SAFE = 1 << 62


class LieAlgebra:
    """Finite-dimensional Lie algebra given by rational structure constants."""

    __slots__ = ("name", "dim", "basis_labels", "f")

    def __init__(self, name, dim, f, basis_labels=None):
        self.name = name
        self.dim = dim
        self.basis_labels = (list(basis_labels) if basis_labels is not None
                             else ["x%d" % i for i in range(dim)])
        if len(self.basis_labels) != dim:
            raise ValueError("label count != dim")
        table = {}
        for (i, j), row in f.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError("index out of range in structure constants")
            if i == j:
                if any(Fraction(c) for c in row.values()):
                    raise ValueError("[x,x] != 0 in structure constants")
                continue
            key, sgn = ((i, j), 1) if i < j else ((j, i), -1)
            clean = {}
            for k, c in row.items():
                c = Fraction(c) * sgn
                if c:
                    clean[k] = c
            if key in table:
                if table[key] != clean:
                    raise ValueError("inconsistent antisymmetric pair (%d,%d)"
                                     % (i, j))
            elif clean:
                table[key] = clean
        self.f = table

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse {k: coeff} dict."""
        if i == j:
            return {}
        if i < j:
            return dict(self.f.get((i, j), {}))
        return {k: -c for k, c in self.f.get((j, i), {}).items()}

    def bracket(self, x, y):
        """Bracket of sparse coordinate dicts."""
        out = {}
        for i, xi in x.items():
            if not xi:
                continue
            for j, yj in y.items():
                if not yj:
                    continue
                c = xi * yj
                for k, v in self.bracket_basis(i, j).items():
                    s = out.get(k, 0) + c * v
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def ad_rows(self):
        """ad_i as sparse rows: ad[i][j] = {k: c} meaning [e_i,e_j] = sum c e_k."""
        ad = [dict() for _ in range(self.dim)]
        for (i, j), row in self.f.items():
            ad[i][j] = dict(row)
            ad[j][i] = {k: -c for k, c in row.items()}
        return ad

    def ad_matrix(self, i):
        m = Mat.zeros(self.dim, self.dim)
        for j, row in self.ad_rows()[i].items():
            for k, c in row.items():
                m.rows[k][j] = c
        return m

    def scaled_int_ads(self):
        """(den, ads) with ads[i][j] = {k: int} and true coeff = int/den."""
        den = 1
        for row in self.f.values():
            for c in row.values():
                den = den * c.denominator // math.gcd(den, c.denominator)
        ads = [dict() for _ in range(self.dim)]
        for (i, j), row in self.f.items():
            r = {k: int(c * den) for k, c in row.items()}
            ads[i][j] = r
            ads[j][i] = {k: -v for k, v in r.items()}
        return den, ads


def _int_ad_tensor(L):
    """(den, A, maxabs) with A[i] the integer-scaled matrix of ad_{e_i}
    (A[i][k][j] = scaled coeff of e_k in [e_i, e_j]), as numpy int64 if
    available and None otherwise."""
    den, ads = L.scaled_int_ads()
    n = L.dim
    maxabs = 0
    for rows in ads:
        for row in rows.values():
            for v in row.values():
                if abs(v) > maxabs:
                    maxabs = abs(v)
    if _np is None or n == 0:
        return den, None, ads, maxabs
    A = _np.zeros((n, n, n), dtype=_np.int64)
    for i, rows in enumerate(ads):
        for j, row in rows.items():
            for k, v in row.items():
                A[i, k, j] = v
    return den, A, ads, maxabs


def _sparse_bracket_int(ads, x, y_index):
    """[x, e_j] for sparse int dict x, via scaled ad rows."""
    out = {}
    for m, c in x.items():
        for k, v in ads[m].get(y_index, {}).items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def _jacobi_triple_ok(ads, i, j, k):
    """Exact triple check [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
    on integer-scaled sparse rows."""
    acc = {}

    def add(term, sgn):
        for m, v in term.items():
            s = acc.get(m, 0) + sgn * v
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]

    add(_sparse_bracket_int(ads, ads[i].get(j, {}), k), 1)
    add(_sparse_bracket_int(ads, ads[j].get(k, {}), i), 1)
    add(_sparse_bracket_int(ads, ads[k].get(i, {}), j), 1)
    return not acc


def jacobi_check(L, mode="full", samples=100000, seed=42, max_seconds=None):
    """Verify the Jacobi identity; returns a report dict.

    Report keys: mode, dim, pass, complete, checked, total, seed (sampled
    mode), witness (an offending (i,j,k) or None).  "complete" is False
    only when a budgeted run stops early; everything actually checked is
    exact either way.
    """
    n = L.dim
    report = {"mode": mode, "dim": n, "pass": True, "complete": True,
              "checked": 0, "total": 0, "witness": None}
    if n < 3 and mode != "sampled":
        report["total"] = 0
        return report
    den, A, ads, maxabs = _int_ad_tensor(L)

    if mode == "sampled":
        report["seed"] = seed
        report["total"] = samples
        rng = random.Random(seed)
        use_np = A is not None and n and n * maxabs * maxabs < _INT64_SAFE
        for _ in range(samples):
            i, j, k = (rng.randrange(n) for _ in range(3))
            if use_np:
                t1 = A[k] @ A[i][:, j]
                t2 = A[i] @ A[j][:, k]
                t3 = A[j] @ A[k][:, i]
                ok = not (t1 + t2 + t3).any()
            else:
                ok = _jacobi_triple_ok(ads, i, j, k)
            report["checked"] += 1
            if not ok:
                report["pass"] = False
                report["witness"] = (i, j, k)
                break
        return report

    if mode not in ("full", "budgeted"):
        raise ValueError("mode must be full, sampled, or budgeted")
    report["total"] = n * (n - 1) // 2
    deadline = None
    if mode == "budgeted":
        if max_seconds is None:
            raise ValueError("budgeted mode needs max_seconds")
        deadline = time.monotonic() + max_seconds

    # per pair (i,j), all k at once:
    #   T1[:,k] = -ad_k [e_i,e_j],  T2 = -ad_i ad_j,  T3 = ad_j ad_i
    use_np = (A is not None and n
              and n * maxabs * maxabs < _INT64_SAFE)
    for i in range(n):
        for j in range(i + 1, n):
            if deadline is not None and time.monotonic() > deadline:
                report["complete"] = False
                report["pass"] = report["witness"] is None
                return report
            if use_np:
                w = A[i][:, j]
                t1 = _np.tensordot(A, w, axes=([2], [0])).T  # t1[:,k] = ad_k w
                m = A[j] @ A[i] - A[i] @ A[j] - t1
                ok = not m.any()
            else:
                ok = all(_jacobi_triple_ok(ads, i, j, k) for k in range(n))
            report["checked"] += 1
            if not ok:
                report["pass"] = False
                bad = next(k for k in range(n)
                           if not _jacobi_triple_ok(ads, i, j, k))
                report["witness"] = (i, j, bad)
                return report
    return report


def killing_form(L):
    """Killing form kappa(e_i,e_j) = tr(ad_i ad_j) as an exact Mat."""
    n = L.dim
    ad = L.ad_rows()
    # entries[i] = list of (j, k, c): [e_i, e_j] has coeff c on e_k
    entries = [[(j, k, c) for j, row in ad[i].items() for k, c in row.items()]
               for i in range(n)]
    kappa = Mat.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            adj = ad[j]
            acc = Fraction(0)
            for (a, b, c) in entries[i]:
                # need coeff of e_a in [e_j, e_b]
                c2 = adj.get(b, {}).get(a)
                if c2:
                    acc += c * c2
            kappa.rows[i][j] = acc
            kappa.rows[j][i] = acc
    return kappa


def killing_signature(L):
    """(n_plus, n_minus, n_zero) of the Killing form, exactly."""
    return ldlt_signature(killing_form(L))


def killing_ad_invariance(L, kappa=None, samples=10000, seed=42):
    """kappa([x,y],z) + kappa(y,[x,z]) = 0 on seeded random basis triples."""
    if kappa is None:
        kappa = killing_form(L)
    n = L.dim
    if n == 0:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        i, j, k = (rng.randrange(n) for _ in range(3))
        lhs = sum(c * kappa.rows[m][k] for m, c in L.bracket_basis(i, j).items())
        rhs = sum(c * kappa.rows[j][m] for m, c in L.bracket_basis(i, k).items())
        if lhs + rhs != 0:
            return False
    return True


def center_dim(L):
    """Dimension of the center {x : [x, e_j] = 0 for all j}."""
    n = L.dim
    if n == 0:
        return 0
    sys = LinearSystem(n)
    rows = {}
    for (i, j), row in L.f.items():
        for k, c in row.items():
            rows.setdefault((j, k), {})[i] = c
            rows.setdefault((i, k), {})[j] = -c
    for row in rows.values():
        sys.add_row(row)
    return n - sys.rank()


def _reduced_with_transform(rows):
    """Gauss-Jordan a list of independent rational rows.

    Returns (reduced, transform) with reduced in reduced echelon form and
    reduced = transform . rows exactly; raises on dependent input.
    """
    k = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a[0])
    t = [[Fraction(1) if i == j else Fraction(0) for j in range(k)]
         for i in range(k)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, k) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        t[r], t[piv] = t[piv], t[r]
        pv = a[r][col]
        if pv != 1:
            a[r] = [x / pv for x in a[r]]
            t[r] = [x / pv for x in t[r]]
        for i in range(k):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        r += 1
        if r == k:
            break
    if r < k:
        raise ValueError("operator basis is linearly dependent")
    return a, t


def build_from_operators(mats, name, basis_labels=None, check_closure=True):
    """Lie algebra of a commutator-closed space of matrices.

    mats: list of Mat, a linearly independent basis.  Structure constants
    come from re-expressing each [m_i, m_j] = m_i m_j - m_j m_i in the
    basis; a commutator outside the span raises ValueError.  Coordinates
    are read off a reduced-echelon form of the basis and every extraction
    is exactly re-verified in one batch at the end.
    """
    dim = len(mats)
    if dim == 0:
        return LieAlgebra(name, 0, {}, [])
    flats = [m.flat() for m in mats]
    try:
        rb = ReducedBasis(flats)
        transform = None
    except ValueError:
        reduced, transform = _reduced_with_transform(flats)
        rb = ReducedBasis(reduced)
    f = {}
    vecs = []
    combos = []
    for i in range(dim):
        for j in range(i + 1, dim):
            c = mats[i] * mats[j] - mats[j] * mats[i]
            if c.is_zero():
                continue
            flat = c.flat()
            cs = rb.coords(flat, verify=not check_closure)
            if cs is None:
                raise ValueError("commutator [%d,%d] outside the span" % (i, j))
            if check_closure:
                vecs.append(flat)
                combos.append(cs)
            if transform is not None:
                cs = [sum(cs[s] * transform[s][t] for s in range(dim) if cs[s])
                      for t in range(dim)]
            row = {k: v for k, v in enumerate(cs) if v}
            if row:
                f[(i, j)] = row
    if check_closure and vecs and not rb.verify_batch(vecs, combos):
        raise ValueError("structure constant extraction failed verification")
    return LieAlgebra(name, dim, f, basis_labels)


def export_json_dict(L):
    """{"name","dim","basis_labels","f"} with f rows [i, j, k, "p/q"], i<j,
    sorted by (i,j,k)."""
    rows = []
    for (i, j) in sorted(L.f):
        for k in sorted(L.f[(i, j)]):
            rows.append([i, j, k, rat_str(L.f[(i, j)][k])])
    return {"name": L.name, "dim": L.dim,
            "basis_labels": list(L.basis_labels), "f": rows}


def import_json_dict(d):
    f = {}
    for i, j, k, c in d["f"]:
        if not i < j:
            raise ValueError("structure constants must be stored with i < j")
        f.setdefault((i, j), {})[k] = parse_rat(c)
    return LieAlgebra(d["name"], d["dim"], f, d.get("basis_labels"))
