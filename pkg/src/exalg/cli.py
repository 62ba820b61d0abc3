"""Command-line interface: construction, verification suites, JSON export.

Exit codes: 0 all requested checks pass, 1 a check fails (a witness is
printed when one exists), 2 usage error, 3 a budgeted run stopped before
finishing.  All randomized suites take --seed (default 42) so identical
invocations print identical output; JSON written for identical
configurations is byte-identical.
"""

import argparse
import json
import sys

from .cayley_dickson import (canonical_octonions, cd_tower, complex_algebra,
                             check_cd_propositions, alternative_witness,
                             find_zero_divisor, is_alternative,
                             is_associative, is_commutative, is_nicely_normed,
                             is_real, quaternions, real_algebra, sedenions,
                             tower_octonions)
from .clifford import center_dim, clifford, even_subalgebra
from .derivations import derivation_algebra, jordan_derivation_algebra
from .jordan import (incident, point_from_vector, projective_axiom_suite)
from .liealg import (export_json_dict, import_json_dict, jacobi_check,
                     killing_ad_invariance, killing_form)
from .linalg import ldlt_signature, parse_rat, rat_str
from .magic import magic_liealg
from .triality import (check_nondegenerate, check_normed,
                       reconstruction_matches, triality_from_algebra)
from . import acceptance

_DEFAULT_SEED = 42

_ALGEBRA_FACTORIES = {
    "real": real_algebra, "r": real_algebra,
    "complex": complex_algebra, "c": complex_algebra,
    "quaternion": quaternions, "h": quaternions,
    "octonion": canonical_octonions, "o": canonical_octonions,
    "tower-octonion": tower_octonions,
    "sedenion": sedenions, "s": sedenions,
}

_PROPERTIES = {
    "real": is_real,
    "commutative": is_commutative,
    "associative": is_associative,
    "alternative": is_alternative,
    "nicely-normed": is_nicely_normed,
}

_MAGIC_LABELS = {"r": "R", "real": "R", "c": "C", "complex": "C",
                 "h": "H", "quaternion": "H", "o": "O", "octonion": "O"}


class UsageError(Exception):
    pass


def _resolve_algebra(label):
    key = label.lower()
    if key in _ALGEBRA_FACTORIES:
        return _ALGEBRA_FACTORIES[key]()
    if key.startswith("cd") and key[2:].isdigit():
        dim = int(key[2:])
        if dim >= 1 and dim & (dim - 1) == 0:
            return cd_tower(dim.bit_length() - 1)
    raise UsageError("unknown algebra %r (try real, complex, quaternion, "
                     "octonion, sedenion, cd32, ...)" % label)


def _resolve_magic_label(label):
    key = label.lower()
    if key in _MAGIC_LABELS:
        return _MAGIC_LABELS[key]
    raise UsageError("unknown square factor %r (try R, C, H, O)" % label)


def _fmt_basis(k):
    return "1" if k == 0 else "e%d" % k


def _fmt_element(x):
    terms = []
    for k, c in enumerate(x.coords):
        if not c:
            continue
        if c == 1:
            terms.append(_fmt_basis(k) if k else "1")
        elif c == -1:
            terms.append("-" + _fmt_basis(k) if k else "-1")
        else:
            terms.append(rat_str(c) + ("*" + _fmt_basis(k) if k else ""))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _dump_json(obj, path):
    data = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    if path == "-":
        sys.stdout.write(data)
    else:
        with open(path, "w") as fh:
            fh.write(data)


def _parse_vector(algebra, text):
    parts = text.split(",")
    if len(parts) != algebra.dim:
        raise UsageError("expected %d comma-separated rationals, got %d"
                         % (algebra.dim, len(parts)))
    try:
        return algebra.element([parse_rat(p.strip()) for p in parts])
    except (ValueError, ZeroDivisionError):
        raise UsageError("cannot parse %r as a rational vector" % text)


def cmd_table(args):
    a = _resolve_algebra(args.algebra)
    labels = [_fmt_basis(k) for k in range(a.dim)]
    if args.imaginary:
        idx = [k for k in range(a.dim) if k != a.unit]
    else:
        idx = list(range(a.dim))
    cells = [[_fmt_element(a.basis(i) * a.basis(j)) for j in idx]
             for i in idx]
    width = max(len(labels[k]) for k in idx)
    width = max(width, max(len(c) for row in cells for c in row))
    head = " " * (width + 2) + " ".join(labels[j].rjust(width) for j in idx)
    print(head)
    for r, i in enumerate(idx):
        print(labels[i].rjust(width) + " |" +
              " ".join(c.rjust(width) for c in cells[r]))
    return 0


def cmd_check(args):
    a = _resolve_algebra(args.algebra)
    if args.property == "all":
        flags = check_cd_propositions(a)
        for name, ok in flags.items():
            print("%s %s: %s" % (name.replace("_", "-"), a.name,
                                 "pass" if ok else "fail"))
        return 0 if all(flags.values()) else 1
    try:
        fn = _PROPERTIES[args.property]
    except KeyError:
        raise UsageError("unknown property %r (try %s, all)"
                         % (args.property, ", ".join(sorted(_PROPERTIES))))
    ok = fn(a)
    print("%s %s: %s" % (args.property, a.name, "pass" if ok else "fail"))
    if not ok and args.property == "alternative":
        w = alternative_witness(a)
        if w is not None:
            i, j, k = w
            print("witness: associator of (%s, %s, %s) is not alternating"
                  % (_fmt_basis(i), _fmt_basis(j), _fmt_basis(k)))
    return 0 if ok else 1


def cmd_zero_divisor(args):
    a = _resolve_algebra(args.algebra)
    found = find_zero_divisor(a)
    if found is None:
        print("%s: no zero divisor among (e_i +- e_j) pairs" % a.name)
    else:
        x, y = found
        print("%s: (%s) * (%s) = 0" % (a.name, _fmt_element(x),
                                       _fmt_element(y)))
    return 0


def cmd_clifford(args):
    n = args.n
    if n < 0 or n > 8:
        raise UsageError("n must be between 0 and 8")
    a = clifford(n)
    checks = [("dim = 2^%d" % n, a.dim == 1 << n),
              ("center dim = %d" % (1 if n % 2 == 0 else 2),
               center_dim(a) == (1 if n % 2 == 0 else 2))]
    if n >= 1:
        ok = True
        try:
            even_subalgebra(n)
        except ValueError:
            ok = False
        checks.append(("even subalgebra matches Cliff(%d)" % (n - 1), ok))
    print("Cliff(%d): dim %d" % (n, a.dim))
    bad = False
    for name, ok in checks:
        print("  %s: %s" % (name, "pass" if ok else "fail"))
        bad = bad or not ok
    return 1 if bad else 0


def cmd_triality(args):
    a = _resolve_algebra(args.algebra)
    if a.dim not in (1, 2, 4, 8):
        raise UsageError("triality wants a division algebra (dim 1, 2, 4, 8)")
    t = triality_from_algebra(a)
    items = [("reconstruction round-trip", reconstruction_matches(a)),
             ("nondegenerate", check_nondegenerate(t, seed=args.seed))]
    rep = check_normed(t, samples=args.samples, seed=args.seed)
    items.append(("normed bound + attainment (%d samples, seed %d)"
                  % (args.samples, args.seed), rep["pass"]))
    print("triality of %s (dims %d/%d/%d)" % (a.name, t.d1, t.d2, t.d3))
    bad = False
    for name, ok in items:
        print("  %s: %s" % (name, "pass" if ok else "fail"))
        bad = bad or not ok
    if bad and rep.get("witness"):
        print("witness: %s" % (rep["witness"],))
    return 1 if bad else 0


def cmd_op2(args):
    o = canonical_octonions()
    if args.suite == "point":
        if len(args.vectors) != 3:
            raise UsageError("point needs three octonion vectors")
        x, y, z = (_parse_vector(o, v) for v in args.vectors)
        try:
            p = point_from_vector(x, y, z)
        except ValueError as exc:
            print("not a point: %s" % exc)
            return 1
        print("trace-1 projection built; p o p = p and p x p = 0 verified")
        for i in range(3):
            print("  row %d: %s" % (i, "  ".join(
                "[" + ",".join(rat_str(c) for c in e.coords) + "]"
                for e in p.rep.entries[i])))
        if args.json:
            _dump_json({"entries": [[[rat_str(c) for c in e.coords]
                                     for e in row]
                                    for row in p.rep.entries]}, args.json)
        return 0
    if args.suite == "incidence":
        if len(args.vectors) != 6:
            raise UsageError("incidence needs six octonion vectors "
                             "(point, then line)")
        vs = [_parse_vector(o, v) for v in args.vectors]
        try:
            p = point_from_vector(*vs[:3])
            ell = point_from_vector(*vs[3:])
        except ValueError as exc:
            print("not a point: %s" % exc)
            return 1
        ok = incident(p, ell)
        print("incident" if ok else "not incident")
        return 0
    if args.suite == "axioms":
        rep = projective_axiom_suite(o, samples=args.samples, seed=args.seed)
        for name, ok in rep["items"].items():
            print("  %s: %s" % (name, "pass" if ok else "fail"))
        print("axiom suite (%d samples, seed %d): %s"
              % (rep["samples"], rep["seed"],
                 "pass" if rep["pass"] else "fail"))
        if not rep["pass"]:
            print("witness: %s" % (rep["witness"],))
        return 0 if rep["pass"] else 1
    raise UsageError("unknown op2 suite %r (try point, incidence, axioms)"
                     % args.suite)


def cmd_derivations(args):
    a = _resolve_algebra(args.algebra)
    if args.jordan:
        if a.dim > 8:
            raise UsageError("jordan derivations want a division algebra")
        der = jordan_derivation_algebra(a, 3)
    else:
        der = derivation_algebra(a)
    print("dim %s = %d" % (der.name, len(der)))
    if args.json:
        _dump_json({"name": der.name, "dim": len(der),
                    "matrix_size": der.dim,
                    "basis": [[[rat_str(c) for c in row] for row in m.rows]
                              for m in der.basis]}, args.json)
    return 0


def cmd_magic(args):
    k = _resolve_magic_label(args.K)
    k2 = _resolve_magic_label(args.K2)
    L = magic_liealg(k, k2)
    if args.jacobi == "full":
        rep = jacobi_check(L, mode="full")
        verdict = "jacobi = %s (full, %d pair rows)" % (
            "pass" if rep["pass"] else "fail", rep["checked"])
    elif args.jacobi == "budgeted":
        rep = jacobi_check(L, mode="budgeted", max_seconds=args.max_seconds)
        verdict = "jacobi = %s (budgeted-full, %d/%d pair rows%s)" % (
            "pass" if rep["pass"] else "fail", rep["checked"], rep["total"],
            "" if rep["complete"] else ", incomplete")
    else:
        rep = jacobi_check(L, mode="sampled", samples=args.samples,
                           seed=args.seed)
        verdict = "jacobi = %s (sampled %d, seed %d)" % (
            "pass" if rep["pass"] else "fail", rep["checked"], rep["seed"])
    print("dim = %d, %s" % (L.dim, verdict))
    if rep["witness"] is not None:
        print("witness: basis triple %s" % (rep["witness"],))
    if args.export:
        _dump_json(export_json_dict(L), args.export)
    if not rep["pass"]:
        return 1
    if not rep.get("complete", True):
        return 3
    return 0


def cmd_killing(args):
    if len(args.target) == 1:
        path = args.target[0]
        try:
            with open(path) as fh:
                L = import_json_dict(json.load(fh))
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (path, exc))
        except (KeyError, ValueError) as exc:
            raise UsageError("bad algebra file %s: %s" % (path, exc))
    elif len(args.target) == 2:
        L = magic_liealg(_resolve_magic_label(args.target[0]),
                         _resolve_magic_label(args.target[1]))
    else:
        raise UsageError("killing wants a JSON file or two factor labels")
    kappa = killing_form(L)
    sig = ldlt_signature(kappa)
    inv = killing_ad_invariance(L, kappa=kappa, samples=args.samples,
                                seed=args.seed)
    print("%s: dim %d, killing signature (%d, %d, %d)%s"
          % (L.name, L.dim, sig[0], sig[1], sig[2],
             ", negative definite" if sig == (0, L.dim, 0) else ""))
    print("ad-invariance on %d seeded triples: %s"
          % (args.samples, "pass" if inv else "fail"))
    return 0 if inv else 1


def cmd_verify_all(args):
    ok, reports = acceptance.run_all(e8_budget_seconds=args.e8_seconds,
                                     out=print)
    print("verify-all: %s" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="exalg",
        description="Exact construction and verification of the normed "
                    "division algebras, their Clifford/triality/Jordan "
                    "geometry, and the magic-square Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("table", help="print a multiplication table")
    q.add_argument("algebra")
    q.add_argument("--full", dest="imaginary", action="store_false",
                   help="include the unit row and column")
    q.set_defaults(fn=cmd_table, imaginary=True)

    q = sub.add_parser("check", help="check one algebra property")
    q.add_argument("property", help="real, commutative, associative, "
                                    "alternative, nicely-normed, or all")
    q.add_argument("algebra")
    q.set_defaults(fn=cmd_check)

    q = sub.add_parser("zero-divisor",
                       help="search (e_i +- e_j) pairs for zero divisors")
    q.add_argument("algebra")
    q.set_defaults(fn=cmd_zero_divisor)

    q = sub.add_parser("clifford", help="Cliff(n) facts and checks")
    q.add_argument("n", type=int)
    q.set_defaults(fn=cmd_clifford)

    q = sub.add_parser("triality", help="triality checks for one algebra")
    q.add_argument("algebra")
    q.add_argument("--samples", type=int, default=500)
    q.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    q.set_defaults(fn=cmd_triality)

    q = sub.add_parser("op2", help="octonionic projective plane")
    q.add_argument("suite", help="point, incidence, or axioms")
    q.add_argument("vectors", nargs="*",
                   help="octonion coordinates, comma-separated rationals")
    q.add_argument("--samples", type=int, default=200)
    q.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    q.add_argument("--json", help="write a JSON report to this path")
    q.set_defaults(fn=cmd_op2)

    q = sub.add_parser("derivations", help="derivation algebra dimension")
    q.add_argument("algebra")
    q.add_argument("--jordan", action="store_true",
                   help="derivations of h3 over the algebra instead")
    q.add_argument("--json", help="write the basis to this path")
    q.set_defaults(fn=cmd_derivations)

    q = sub.add_parser("magic", help="one magic-square cell")
    q.add_argument("K")
    q.add_argument("K2")
    q.add_argument("--export", help="write the structure constants as JSON")
    q.add_argument("--jacobi", choices=("full", "sampled", "budgeted"),
                   default="sampled")
    q.add_argument("--samples", type=int, default=100000)
    q.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    q.add_argument("--max-seconds", type=float, default=600.0,
                   help="cap for --jacobi budgeted")
    q.set_defaults(fn=cmd_magic)

    q = sub.add_parser("killing",
                       help="killing signature of a cell or JSON file")
    q.add_argument("target", nargs="+",
                   help="two factor labels (R C H O) or one JSON path")
    q.add_argument("--samples", type=int, default=10000)
    q.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    q.set_defaults(fn=cmd_killing)

    q = sub.add_parser("verify-all", help="run the full verification suite")
    q.add_argument("--e8-seconds", type=float, default=None,
                   help="also run the budgeted full Jacobi sweep of the "
                        "248-dim cell, capped at this many seconds")
    q.set_defaults(fn=cmd_verify_all)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
