"""Clifford algebras on n anticommuting square roots of -1, as blade algebras.

Blades are bitmasks over the generators (bit i set means e_{i+1} is a
factor, factors written in increasing index order).  The product sign is
computed by counting the transpositions needed to interleave two sorted
index lists plus one -1 per squared generator; a naive sort-based oracle
for the same sign lives in blade_sign_naive for cross-checking.

The star operation is the main anti-automorphism (reversal): identity on
generators, reversing products, so a k-blade picks up (-1)^(k(k-1)/2).
"""

from fractions import Fraction
from functools import cache

from .algebras import StarAlgebra
from .linalg import LinearSystem, Mat

_F1 = Fraction(1)


def blade_sign(a, b):
    """Sign of (blade a) * (blade b); the result blade is a ^ b."""
    sign = 1
    m = b
    while m:
        low = m & -m
        i = low.bit_length() - 1
        # generators of a with index > i must hop over e_{i+1}
        if (a >> (i + 1)).bit_count() & 1:
            sign = -sign
        m ^= low
    # each common generator squares to -1
    if (a & b).bit_count() & 1:
        sign = -sign
    return sign


def blade_sign_naive(a, b):
    """Sort-based oracle for blade_sign: bubble the concatenated index
    sequence into order counting swaps, then cancel equal adjacent pairs
    with a -1 each."""
    seq = [i for i in range(a.bit_length()) if a >> i & 1] + \
          [i for i in range(b.bit_length()) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for t in range(len(seq) - 1):
            if seq[t] > seq[t + 1]:
                seq[t], seq[t + 1] = seq[t + 1], seq[t]
                sign = -sign
                changed = True
    t = 0
    while t < len(seq) - 1:
        if seq[t] == seq[t + 1]:
            sign = -sign
            del seq[t:t + 2]
            t = max(t - 1, 0)
        else:
            t += 1
    return sign


def blade_product(a, b):
    """(sign, result mask) of the product of two blades."""
    return blade_sign(a, b), a ^ b


def reversal_sign(mask):
    k = mask.bit_count()
    return -1 if (k * (k - 1) // 2) & 1 else 1


@cache
def clifford(n):
    """Cliff(n) as a StarAlgebra of dimension 2^n, blade basis in mask order."""
    if n > 10:
        raise ValueError("n > 10 not supported (table would be huge)")
    dim = 1 << n
    mult = {}
    for a in range(dim):
        for b in range(dim):
            s, m = blade_product(a, b)
            mult[(a, b)] = {m: s}
    star = [[0] * dim for _ in range(dim)]
    for m in range(dim):
        star[m][m] = reversal_sign(m)
    return StarAlgebra("Cliff(%d)" % n, dim, mult, star, unit=0,
                       check=(n <= 8))


def center_dim(a):
    """Dimension of {x : x b = b x for all basis b}."""
    n = a.dim
    sys_ = LinearSystem(n)
    for b in range(n):
        rows = {}
        for i in range(n):
            for k, c in a.mult.get((i, b), {}).items():
                rows.setdefault(k, {}).setdefault(i, Fraction(0))
                rows[k][i] += c
            for k, c in a.mult.get((b, i), {}).items():
                rows.setdefault(k, {}).setdefault(i, Fraction(0))
                rows[k][i] -= c
        for k in sorted(rows):
            sys_.add_row(rows[k])
    return a.dim - sys_.rank()


def even_subalgebra(n):
    """(Cliff0(n) as a StarAlgebra, phi images) where phi(e_i) = e_i e_n.

    Cliff0(n) is the span of even blades of Cliff(n).  phi maps the
    generators of Cliff(n-1) into it and is extended multiplicatively to
    blades; the extension is verified to be a bijective algebra map on all
    basis pairs, realizing Cliff(n-1) = Cliff0(n).  Raises on any mismatch.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    big = clifford(n)
    small = clifford(n - 1)
    even_masks = [m for m in range(1 << n) if m.bit_count() % 2 == 0]
    pos = {m: t for t, m in enumerate(even_masks)}
    mult = {}
    for i, a in enumerate(even_masks):
        for j, b in enumerate(even_masks):
            s, m = blade_product(a, b)
            mult[(i, j)] = {pos[m]: s}
    star = [[0] * len(even_masks) for _ in even_masks]
    for i, m in enumerate(even_masks):
        star[i][i] = reversal_sign(m)
    sub = StarAlgebra("Cliff0(%d)" % n, len(even_masks), mult, star,
                      unit=0, check=(n <= 8))

    # phi on a blade of Cliff(n-1): product of (e_i e_n) over its generators
    top = 1 << (n - 1)
    images = []
    for m in range(1 << (n - 1)):
        sign = 1
        acc = 0
        for i in range(n - 1):
            if m >> i & 1:
                s, acc = blade_product(acc, (1 << i) | top)
                sign *= s
        images.append((sign, acc))
    # bijective onto even blades?
    if sorted(acc for _, acc in images) != sorted(even_masks):
        raise ValueError("phi image is not the even subalgebra")
    # product preserving on all basis pairs?
    for a in range(1 << (n - 1)):
        sa, ma = images[a]
        for b in range(1 << (n - 1)):
            sb, mb = images[b]
            s_small, m_small = blade_product(a, b)
            s_img, m_img = images[m_small]
            s_big, m_big = blade_product(ma, mb)
            if (sa * sb * s_big, m_big) != (s_small * s_img, m_img):
                raise ValueError("phi fails at blade pair (%d, %d)" % (a, b))
    return sub, images


def pinor_rep_check(algebra):
    """Left multiplication by imaginaries represents Cliff(dim-1).

    Verifies L_a L_b + L_b L_a = -2 <a,b> id for all imaginary basis pairs
    of a division algebra with orthonormal basis and unit at index 0.
    """
    n = algebra.dim
    ident = Mat.identity(n)
    ls = [algebra.left_mult_matrix(algebra.basis(i)) for i in range(1, n)]
    for p, la in enumerate(ls):
        for q, lb in enumerate(ls):
            anti = la * lb + lb * la
            want = (-2 if p == q else 0) * ident
            if anti != want:
                return False
    return True
