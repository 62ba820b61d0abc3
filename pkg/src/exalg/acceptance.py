"""The nine-point verification suite: every headline quantity recomputed.

Each criterion function reruns its computations from scratch against
frozen expected values and returns a report dict with "pass", "detail",
and "elapsed" keys; run_all prints one line per criterion.  Everything
is exact rational arithmetic; the only budgeted item is the full Jacobi
sweep of the 248-dimensional algebra, which honestly reports how far it
got when capped.
"""

import random
import time
from fractions import Fraction

from .cayley_dickson import (canonical_octonions, cd_tower,
                             check_cd_propositions, check_index_cycling,
                             check_index_doubling, complex_algebra,
                             find_zero_divisor, quaternions, real_algebra,
                             sedenions)
from .clifford import (center_dim, clifford, even_subalgebra,
                       pinor_rep_check)
from .derivations import (derivation_algebra, inner_span_rank,
                          jordan_derivation_algebra,
                          so_decomposition_checks)
from .jordan import (JordanElement, conjugate_by_signed_perm, det3,
                     det_preserving_liealg, h2_iso_check, jordan_basis,
                     jordan_product, l_operator_matrix, polarize_det,
                     projective_axiom_suite, random_jordan_element,
                     signed_perm_conjugations, trace3)
from .liealg import LieAlgebra, jacobi_check, killing_signature
from .magic import dimension_accounting, magic_liealg
from .triality import (check_nondegenerate, check_normed,
                       reconstruction_matches, triality_from_algebra)

# e_i e_j for i, j in 1..7 as (sign, index), the frozen 49-product table
_TABLE1 = [
    [(-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
]

# property flags along the doubling ladder R, C, H, O, sedenions
_LADDER = [
    {"real": True, "commutative": True, "associative": True,
     "alternative": True, "nicely_normed": True},
    {"real": False, "commutative": True, "associative": True,
     "alternative": True, "nicely_normed": True},
    {"real": False, "commutative": False, "associative": True,
     "alternative": True, "nicely_normed": True},
    {"real": False, "commutative": False, "associative": False,
     "alternative": True, "nicely_normed": True},
    {"real": False, "commutative": False, "associative": False,
     "alternative": False, "nicely_normed": True},
]

# Lie algebra dimension of the square cell (row K, column K')
_SQUARE_DIMS = [[3, 8, 21, 52], [8, 16, 35, 78],
                [21, 35, 66, 133], [52, 78, 133, 248]]

_LABELS = ["R", "C", "H", "O"]


def _finish(num, title, checks, t0, budget=None, skipped=()):
    elapsed = time.monotonic() - t0
    failed = [name for name, ok in checks if not ok]
    ok = not failed
    detail = "%d/%d checks" % (len(checks) - len(failed), len(checks))
    if failed:
        detail += "; FAILED: " + ", ".join(failed)
    if budget is not None and elapsed > budget:
        ok = False
        detail += "; over budget (%.1fs > %.0fs)" % (elapsed, budget)
    if skipped:
        detail += "; skipped: " + ", ".join(skipped)
    return {"num": num, "title": title, "pass": ok, "elapsed": elapsed,
            "budget": budget, "detail": detail, "skipped": list(skipped)}


def criterion_1():
    """Octonion table fidelity plus index cycling and doubling."""
    t0 = time.monotonic()
    o = canonical_octonions()
    checks = []
    ok = True
    for i in range(1, 8):
        for j in range(1, 8):
            s, k = _TABLE1[i - 1][j - 1]
            if o.mult[(i, j)] != {k: Fraction(s)}:
                ok = False
    checks.append(("49 imaginary products match the frozen table", ok))
    checks.append(("index cycling", check_index_cycling()))
    checks.append(("index doubling", check_index_doubling()))
    return _finish(1, "octonion table fidelity", checks, t0, budget=1.0)


def criterion_2():
    """Doubling ladder flags, norm multiplicativity, zero divisors."""
    t0 = time.monotonic()
    checks = []
    for level in range(5):
        a = cd_tower(level)
        checks.append(("ladder flags at dim %d" % a.dim,
                       check_cd_propositions(a) == _LADDER[level]))
    rng = random.Random(42)
    for a in (real_algebra(), complex_algebra(), quaternions(),
              canonical_octonions()):
        ok = True
        for _ in range(1000):
            x = a.element([rng.randint(-9, 9) for _ in range(a.dim)])
            y = a.element([rng.randint(-9, 9) for _ in range(a.dim)])
            if (x * y).norm_sq() != x.norm_sq() * y.norm_sq():
                ok = False
                break
        checks.append(("norm multiplicativity on %s" % a.name, ok))
    zd = find_zero_divisor(sedenions())
    checks.append(("sedenion zero divisor found",
                   zd is not None and not zd[0].is_zero()
                   and not zd[1].is_zero() and (zd[0] * zd[1]).is_zero()))
    checks.append(("octonions have none in the same family",
                   find_zero_divisor(canonical_octonions()) is None))
    return _finish(2, "division-algebra ladder", checks, t0, budget=30.0)


def criterion_3():
    """Clifford dimensions, low-dim identifications, centers, evens, pinors."""
    t0 = time.monotonic()
    checks = []
    checks.append(("dim Cliff(n) = 2^n for n <= 8",
                   all(clifford(n).dim == 1 << n for n in range(9))))
    checks.append(("Cliff(1) multiplication table is the complex one",
                   clifford(1).mult == complex_algebra().mult))
    c2, h = clifford(2), quaternions()
    images = [(1, 0), (1, 1), (1, 2), (-1, 3)]  # 1, e1, e2, e12 -> 1, e1, e2, -e3
    ok = True
    for (i, j), row in c2.mult.items():
        si, mi = images[i]
        sj, mj = images[j]
        want = {images[k][1]: c * images[k][0] for k, c in row.items()}
        got = {k: si * sj * c for k, c in h.mult[(mi, mj)].items()}
        if want != got:
            ok = False
    checks.append(("Cliff(2) matches the quaternions via (1,e1,e2,-e3)", ok))
    checks.append(("centers alternate 1, 2",
                   [center_dim(clifford(n)) for n in range(9)]
                   == [1, 2, 1, 2, 1, 2, 1, 2, 1]))
    ok = True
    try:
        for n in range(1, 9):
            even_subalgebra(n)  # raises on any mismatch
    except ValueError:
        ok = False
    checks.append(("Cliff(n-1) = Cliff0(n) for n <= 8", ok))
    for a in (real_algebra(), complex_algebra(), quaternions(),
              canonical_octonions()):
        checks.append(("pinor relation on %s" % a.name, pinor_rep_check(a)))
    return _finish(3, "Clifford suite", checks, t0, budget=120.0)


def criterion_4():
    """Triality round-trips and the normed bound with attainment."""
    t0 = time.monotonic()
    checks = []
    for a in (real_algebra(), complex_algebra(), quaternions(),
              canonical_octonions()):
        checks.append(("reconstruction round-trip on %s" % a.name,
                       reconstruction_matches(a)))
    t8 = triality_from_algebra(canonical_octonions())
    checks.append(("t8 nondegenerate", check_nondegenerate(t8)))
    rep = check_normed(t8, samples=500, seed=42)
    checks.append(("t8 bound and attainment on 500 samples", rep["pass"]))
    return _finish(4, "triality", checks, t0)


def criterion_5():
    """Jordan algebra identities and the projective plane."""
    t0 = time.monotonic()
    o = canonical_octonions()
    checks = []
    rng = random.Random(42)
    ok = True
    for _ in range(200):
        a = random_jordan_element(o, 3, rng, span=2, maxden=2)
        b = random_jordan_element(o, 3, rng, span=2, maxden=2)
        a2 = jordan_product(a, a)
        if jordan_product(jordan_product(a, b), a2) != \
                jordan_product(a, jordan_product(b, a2)):
            ok = False
            break
    checks.append(("Jordan identity on 200 random pairs", ok))
    basis = jordan_basis(o, 3)
    checks.append(("tr = tr(L_a)/9 on all 27 basis elements",
                   all(trace3(e) == Fraction(l_operator_matrix(e).trace(), 9)
                       for e in basis)))
    ok_cubic = ok_diag = True
    for _ in range(200):
        a = random_jordan_element(o, 3, rng, span=2, maxden=2)
        t1 = a.trace()
        a2 = jordan_product(a, a)
        a3 = jordan_product(a, a2)
        if det3(a) != (t1 ** 3 - 3 * t1 * a2.trace() + 2 * a3.trace()) / 6:
            ok_cubic = False
            break
        if polarize_det(a, a, a) != det3(a):
            ok_diag = False
            break
    checks.append(("det = (t1^3 - 3 t1 t2 + 2 t3)/6 on 200 random", ok_cubic))
    checks.append(("(a,a,a) = det(a) on 200 random", ok_diag))
    rep = projective_axiom_suite(o, samples=200, seed=42)
    checks.append(("projective axiom suite (200 samples)", rep["pass"]))
    checks.append(("h2 spin-factor isomorphism", h2_iso_check(o)))
    perms = signed_perm_conjugations()
    checks.append(("48 signed permutations enumerated", len(perms) == 48))
    ok = True
    for perm, signs in perms:
        a = random_jordan_element(o, 3, rng, span=2, maxden=1)
        b = random_jordan_element(o, 3, rng, span=2, maxden=1)
        ga = conjugate_by_signed_perm(a, perm, signs)
        gb = conjugate_by_signed_perm(b, perm, signs)
        gab = conjugate_by_signed_perm(jordan_product(a, b), perm, signs)
        if jordan_product(ga, gb) != gab or ga.trace() != a.trace() \
                or det3(ga) != det3(a):
            ok = False
            break
    checks.append(("conjugations preserve product, trace, det", ok))
    return _finish(5, "Jordan and projective suite", checks, t0, budget=300.0)


def criterion_6():
    """Derivation algebra dimensions and the so decompositions."""
    t0 = time.monotonic()
    checks = []
    for a, want in ((complex_algebra(), 0), (quaternions(), 3),
                    (canonical_octonions(), 14)):
        checks.append(("dim Der(%s) = %d" % (a.name, want),
                       len(derivation_algebra(a)) == want))
    for a, want in ((real_algebra(), 3), (complex_algebra(), 8),
                    (quaternions(), 21), (canonical_octonions(), 52)):
        checks.append(("dim Der(h3(%s)) = %d" % (a.name, want),
                       len(jordan_derivation_algebra(a)) == want))
    checks.append(("inner derivations of O span rank 14",
                   inner_span_rank(canonical_octonions()) == 14))
    rep = so_decomposition_checks()
    checks.append(("der + L + R spans so(8), rank 28",
                   rep["rank_so8"] == 28 and rep["pass"]))
    checks.append(("der + ad spans so(Im O), rank 21", rep["rank_so7"] == 21))
    return _finish(6, "derivation dimensions", checks, t0, budget=600.0)


def criterion_7(e8_budget_seconds=None):
    """The sixteen-cell square: dimensions, accountings, Jacobi."""
    t0 = time.monotonic()
    checks = []
    skipped = []
    cells = {}
    ok_dim = ok_acc = True
    for i, k in enumerate(_LABELS):
        for j, k2 in enumerate(_LABELS):
            cells[(k, k2)] = magic_liealg(k, k2)
            if cells[(k, k2)].dim != _SQUARE_DIMS[i][j]:
                ok_dim = False
            if not dimension_accounting(k, k2)["agree"]:
                ok_acc = False
    checks.append(("16 cell dimensions match the frozen grid", ok_dim))
    checks.append(("three dimension accountings agree per cell", ok_acc))
    ok = True
    for (k, k2), L in cells.items():
        if L.dim <= 133 and not jacobi_check(L)["pass"]:
            ok = False
    checks.append(("full Jacobi on every cell of dim <= 133", ok))
    e8 = cells[("O", "O")]
    rep = jacobi_check(e8, mode="sampled", samples=100000, seed=42)
    checks.append(("e8 Jacobi sampled 10^5, seed 42", rep["pass"]))
    core = time.monotonic() - t0  # budget excludes the capped full sweep
    if e8_budget_seconds is not None:
        rep = jacobi_check(e8, mode="budgeted",
                           max_seconds=e8_budget_seconds)
        label = "e8 Jacobi budgeted-full (%d/%d pairs%s)" % (
            rep["checked"], rep["total"],
            "" if rep["complete"] else ", capped")
        checks.append((label, rep["pass"]))
    else:
        skipped.append("e8 budgeted-full Jacobi (no budget given)")
    out = _finish(7, "magic square", checks, t0, skipped=skipped)
    if core > 1800.0:
        out["pass"] = False
        out["detail"] += "; core over budget (%.1fs > 1800s)" % core
    return out


def criterion_8():
    """Killing signatures and determinant-preserving algebras."""
    t0 = time.monotonic()
    checks = []
    checks.append(("Killing of the 52-cell is (0, 52, 0)",
                   killing_signature(magic_liealg("R", "O")) == (0, 52, 0)))
    checks.append(("Killing of the 21-cell is (0, 21, 0)",
                   killing_signature(magic_liealg("R", "H")) == (0, 21, 0)))
    o = canonical_octonions()
    L3 = det_preserving_liealg(o, 3)
    checks.append(("det preservers of h3(O): dim 78", L3.dim == 78))
    checks.append(("their Killing signature (26, 52, 0)",
                   killing_signature(L3) == (26, 52, 0)))
    L2 = det_preserving_liealg(o, 2)
    checks.append(("det preservers of h2(O): dim 45", L2.dim == 45))
    return _finish(8, "signatures", checks, t0, budget=1200.0)


def criterion_9():
    """Negative controls: corruption and bad input must be rejected."""
    t0 = time.monotonic()
    checks = []
    L = magic_liealg("R", "O")
    rng = random.Random(42)
    keys = sorted(L.f)
    caught = 0
    tried = 0
    picks = {keys[0], keys[-1]}
    while len(picks) < 6:
        picks.add(keys[rng.randrange(len(keys))])
    for key in sorted(picks):
        f = {k: dict(v) for k, v in L.f.items()}
        ks = sorted(f[key])
        target = ks[rng.randrange(len(ks))]
        f[key][target] *= 2  # never zero, never a new index
        bad = LieAlgebra("corrupted", L.dim, f, L.basis_labels)
        rep = jacobi_check(bad)
        tried += 1
        if not rep["pass"] and rep["witness"] is not None:
            caught += 1
    checks.append(("%d/%d corrupted constants caught with witnesses"
                   % (caught, tried), caught == tried))
    o = canonical_octonions()
    e1 = o.basis(1)
    one = o.one()
    zero = o.zero()
    ok = False
    try:
        JordanElement(o, [[one, e1, zero], [e1, one, zero],
                          [zero, zero, one]])
    except ValueError:
        ok = True
    checks.append(("non-hermitian matrix rejected", ok))
    ok = False
    try:
        JordanElement(o, [[e1, zero, zero], [zero, one, zero],
                          [zero, zero, one]])
    except ValueError:
        ok = True
    checks.append(("non-real diagonal rejected", ok))
    return _finish(9, "negative controls", checks, t0)


_CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
             criterion_6, criterion_7, criterion_8, criterion_9]


def format_line(rep):
    word = "PASS" if rep["pass"] else "FAIL"
    return "criterion %d: %s  %s  (%s; %.1fs)" % (
        rep["num"], word, rep["title"], rep["detail"], rep["elapsed"])


def run_all(e8_budget_seconds=None, out=None):
    """Run criteria 1-9 in order; returns (all_pass, reports)."""
    reports = []
    for fn in _CRITERIA:
        if fn is criterion_7:
            rep = fn(e8_budget_seconds=e8_budget_seconds)
        else:
            rep = fn()
        reports.append(rep)
        if out is not None:
            out(format_line(rep))
    return all(r["pass"] for r in reports), reports
