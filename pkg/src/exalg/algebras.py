"""Finite-dimensional *-algebras over Q given by structure constants.

A StarAlgebra is a multiplication table e_i e_j = sum_k c[i][j][k] e_k
together with a distinguished unit basis index and a linear involution
(the conjugation).  Elements are plain coordinate vectors.  The inner
product is <x,y> = Re(x* y), the unit coefficient of x* y, which makes
basis orthonormality a checkable property rather than an assumption.
"""

from fractions import Fraction

from .linalg import Mat, rat_str, parse_rat

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class StarAlgebra:
    """Structure-constant algebra with unit and conjugation.

    mult maps (i, j) -> {k: coefficient}; missing pairs multiply to zero.
    star is a dim x dim matrix sending e_i to column i.  Tables are frozen
    at construction; set check=False to skip the unit/involution audit
    (used for very large tables where the caller checks separately).
    """

    def __init__(self, name, dim, mult, star, unit=0, check=True):
        self.name = name
        self.dim = dim
        self.unit = unit
        tbl = {}
        for (i, j), terms in mult.items():
            row = {k: _as_fraction(v) for k, v in terms.items() if v}
            if row:
                tbl[(i, j)] = row
        self.mult = tbl
        if isinstance(star, Mat):
            self.star = star
        else:
            self.star = Mat(star)
        # signed-permutation fast path for conjugation
        self._star_sp = self._detect_signed_perm(self.star)
        if check:
            self._check_unit()
            self._check_star()

    @staticmethod
    def _detect_signed_perm(m):
        sp = []
        for i in range(m.n):
            hit = None
            for j in range(m.m):
                v = m[j, i]
                if v != 0:
                    if hit is not None or (v != 1 and v != -1):
                        return None
                    hit = (j, v)
            if hit is None:
                return None
            sp.append(hit)
        return sp

    def _check_unit(self):
        u = self.unit
        for i in range(self.dim):
            for (a, b) in ((u, i), (i, u)):
                row = self.mult.get((a, b), {})
                if row != {i: _F1}:
                    raise ValueError("%s: unit law fails at e_%d e_%d"
                                     % (self.name, a, b))

    def _conj_sparse(self, d):
        """Conjugate of a sparse {index: coeff} vector, sparse."""
        out = {}
        if self._star_sp is not None:
            for i, v in d.items():
                j, s = self._star_sp[i]
                w = out.get(j, _F0) + (v if s == 1 else -v)
                if w:
                    out[j] = w
                elif j in out:
                    del out[j]
            return out
        for i, v in d.items():
            if not v:
                continue
            for j in range(self.dim):
                c = self.star[j, i]
                if c:
                    w = out.get(j, _F0) + c * v
                    if w:
                        out[j] = w
                    elif j in out:
                        del out[j]
        return out

    def _mult_sparse(self, a, b):
        out = {}
        for i, ai in a.items():
            for j, bj in b.items():
                row = self.mult.get((i, j))
                if row:
                    f = ai * bj
                    for k, c in row.items():
                        w = out.get(k, _F0) + f * c
                        if w:
                            out[k] = w
                        elif k in out:
                            del out[k]
        return out

    def _check_star(self):
        n = self.dim
        conj = [self._conj_sparse({i: _F1}) for i in range(n)]
        # involution
        for i in range(n):
            if self._conj_sparse(conj[i]) != {i: _F1}:
                raise ValueError("%s: star is not an involution" % self.name)
        # anti-homomorphism on basis pairs: (e_i e_j)* = e_j* e_i*
        for i in range(n):
            for j in range(n):
                lhs = self._conj_sparse(self.mult.get((i, j), {}))
                rhs = self._mult_sparse(conj[j], conj[i])
                if lhs != rhs:
                    raise ValueError("%s: (e_%d e_%d)* != e_%d* e_%d*"
                                     % (self.name, i, j, j, i))

    # -- low-level coordinate operations -----------------------------------

    def mult_coords_basis(self, i, j):
        out = [_F0] * self.dim
        for k, c in self.mult.get((i, j), {}).items():
            out[k] = c
        return out

    def mult_coords(self, a, b):
        out = [_F0] * self.dim
        mult = self.mult
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                row = mult.get((i, j))
                if row:
                    f = ai * bj
                    for k, c in row.items():
                        out[k] += f * c
        return out

    def conj_coords(self, a):
        if self._star_sp is not None:
            out = [_F0] * self.dim
            for i, ai in enumerate(a):
                if ai:
                    j, s = self._star_sp[i]
                    out[j] += ai if s == 1 else -ai
            return out
        return self.star.apply(a)

    def conj_basis(self, i):
        return self.conj_coords([_F1 if j == i else _F0 for j in range(self.dim)])

    # -- element factory ----------------------------------------------------

    def element(self, coords):
        return Element(self, coords)

    def basis(self, i):
        return Element(self, [_F1 if j == i else _F0 for j in range(self.dim)])

    def zero(self):
        return Element(self, [_F0] * self.dim)

    def one(self):
        return self.basis(self.unit)

    def scalar(self, c):
        v = [_F0] * self.dim
        v[self.unit] = _as_fraction(c)
        return Element(self, v)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    # -- operators ------------------------------------------------------------

    def left_mult_matrix(self, a):
        """Matrix of x -> a x in the basis."""
        n = self.dim
        m = [[_F0] * n for _ in range(n)]
        for i, ai in enumerate(a.coords):
            if not ai:
                continue
            for j in range(n):
                row = self.mult.get((i, j))
                if row:
                    for k, c in row.items():
                        m[k][j] += ai * c
        return Mat(m)

    def right_mult_matrix(self, a):
        """Matrix of x -> x a in the basis."""
        n = self.dim
        m = [[_F0] * n for _ in range(n)]
        for j, aj in enumerate(a.coords):
            if not aj:
                continue
            for i in range(n):
                row = self.mult.get((i, j))
                if row:
                    for k, c in row.items():
                        m[k][i] += aj * c
        return Mat(m)

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self):
        entries = []
        for (i, j) in sorted(self.mult):
            for k in sorted(self.mult[(i, j)]):
                entries.append([i, j, k, rat_str(self.mult[(i, j)][k])])
        return {
            "name": self.name,
            "dim": self.dim,
            "unit": self.unit,
            "star": [[rat_str(x) for x in row] for row in self.star.rows],
            "mult": entries,
        }

    @classmethod
    def from_json_dict(cls, d, check=True):
        mult = {}
        for i, j, k, v in d["mult"]:
            mult.setdefault((i, j), {})[k] = parse_rat(v)
        star = [[parse_rat(x) for x in row] for row in d["star"]]
        return cls(d["name"], d["dim"], mult, star, unit=d["unit"], check=check)

    def table_equal(self, other):
        return (self.dim == other.dim and self.unit == other.unit
                and self.mult == other.mult
                and self.star.rows == other.star.rows)

    def __repr__(self):
        return "StarAlgebra(%s, dim=%d)" % (self.name, self.dim)


class Element:
    """Coordinate vector in a StarAlgebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length mismatch")
        self.algebra = algebra
        self.coords = tuple(_as_fraction(x) for x in coords)

    def _require_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __add__(self, other):
        self._require_same(other)
        return Element(self.algebra,
                       [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._require_same(other)
        return Element(self.algebra,
                       [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._require_same(other)
            return Element(self.algebra,
                           self.algebra.mult_coords(self.coords, other.coords))
        return Element(self.algebra, [a * _as_fraction(other) for a in self.coords])

    def __rmul__(self, other):
        return Element(self.algebra, [_as_fraction(other) * a for a in self.coords])

    def __truediv__(self, scalar):
        c = _as_fraction(scalar)
        return Element(self.algebra, [a / c for a in self.coords])

    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def conjugate(self):
        return Element(self.algebra, self.algebra.conj_coords(self.coords))

    def re(self):
        """Coefficient of the unit."""
        return self.coords[self.algebra.unit]

    def im(self):
        """Element minus its unit component."""
        v = list(self.coords)
        v[self.algebra.unit] = _F0
        return Element(self.algebra, v)

    def scalar_part_only(self):
        return all(a == 0 for i, a in enumerate(self.coords)
                   if i != self.algebra.unit)

    def norm_sq(self):
        """Unit coefficient of a a*; raises if a a* is not scalar."""
        p = self * self.conjugate()
        if not p.scalar_part_only():
            raise ValueError("a a* is not scalar; algebra not nicely normed"
                             " at this element")
        return p.re()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        n = self.norm_sq()
        return self.conjugate() / n


def verify_algebra_map(domain, images, check_injective=True):
    """True iff e_i -> images[i] extends to an algebra homomorphism.

    images are Elements of the codomain, one per domain basis vector.  All
    basis products are compared exactly; with check_injective the images
    must also be linearly independent.
    """
    from .linalg import rank as _rank
    n = domain.dim
    if len(images) != n:
        raise ValueError("need one image per basis vector")
    cod = images[0].algebra
    for i in range(n):
        for j in range(n):
            lhs = images[i] * images[j]
            rhs = cod.zero()
            for k, c in domain.mult.get((i, j), {}).items():
                rhs = rhs + c * images[k]
            if lhs != rhs:
                return False
    if check_injective:
        if _rank([list(g.coords) for g in images]) != n:
            return False
    return True


def inner(a, b):
    """<a,b> = Re(a* b)."""
    return (a.conjugate() * b).re()


def commutator(a, b):
    return a * b - b * a


def associator(a, b, c):
    return (a * b) * c - a * (b * c)
