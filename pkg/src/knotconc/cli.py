"""Command-line interface.

Exit codes: 0 for PASS / true, 1 for a mathematical negative, 2 for errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .blanchfield import (blanchfield_pair, generates, is_nonsingular, module_from_seifert)
from .descriptor import (Atom, abelian_delta, arf_eval, determinant_eval, parse, render, rho_abelian,
                         sigma_eval, signature_step)
from .errors import Infeasible, KnotconcError, MarginViolated
from .exactnum import QQ, LaurentPoly, Ring, UnitCirclePoint, poly_from_string
from .groups import GroupPresentation, alexander_from_presentation
from .obstruction import FamilyCertificate, FamilySpec, nonsolvability_certificate, solve_family, verify_family
from .seifert import SeifertMatrix, lookup, signature_function

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, default=str))


def _load_matrix(arg: str) -> SeifertMatrix:
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        return SeifertMatrix.load(path)
    return lookup(arg)


def _descriptor(arg: str, extra_matrices=()):
    """A descriptor from an expression, a catalog name or a Seifert matrix file."""
    matrices = {}
    for m in extra_matrices:
        A = SeifertMatrix.load(m)
        matrices[A.name or Path(m).stem] = A
    path = Path(arg)
    if path.suffix == ".json" and path.is_file():
        A = SeifertMatrix.load(path)
        return Atom(A if A.name else SeifertMatrix(A.entries, path.stem))
    return parse(arg, matrices)


def _vector(path: str, ring: Ring) -> list[LaurentPoly]:
    data = json.loads(Path(path).read_text())
    out = []
    for x in data:
        if isinstance(x, str) and "t" in x:
            out.append(poly_from_string(ring, x))
        else:
            out.append(LaurentPoly.from_json(ring, x))
    return out


def _fmt(x) -> str:
    return str(x) if not isinstance(x, Fraction) or x.denominator != 1 else str(x.numerator)


# -- commands ---------------------------------------------------------------


def cmd_invariants(args) -> int:
    K = _descriptor(args.knot, args.matrix)
    points = [UnitCirclePoint.parse(s) for s in (args.at or ["1/2"])]
    doc = {
        "knot": render(K),
        "alexander": str(abelian_delta(K)),
        "alexander_coeffs": abelian_delta(K).to_json(),
        "arf": arf_eval(K),
        "det_at_minus_one": determinant_eval(K),
        "signatures": {str(w): sigma_eval(K, w) for w in points},
    }
    _emit(doc)
    return EXIT_OK


def cmd_sigfn(args) -> int:
    K = _descriptor(args.knot, args.matrix)
    if args.sampled and isinstance(K, Atom):
        f = signature_function(K.matrix, allow_sampled=True)
    else:
        f = signature_step(K)
    header = ["theta_start_rational_multiple_of_pi", "theta_end", "sigma"]
    rows = [[_fmt(a), _fmt(b), "" if v is None else v] for a, b, v in f.table()] if f.exact else \
        [[_fmt(2 * a), _fmt(2 * b), v] for a, b, v in f.arcs()]
    w = csv.writer(sys.stdout)
    w.writerow(header)
    w.writerows(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            out = csv.writer(fh)
            out.writerow(header)
            out.writerows(rows)
    if args.svg:
        _plot(f, args.svg, render(K))
    if f.exact:
        print(f"# integral = {f.integral()}", file=sys.stderr)
    return EXIT_OK


def _plot(f, path: str, title: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 3))
    for a, b, v in f.table():
        if v is None:
            continue
        if a == b:
            ax.plot([float(a)], [v], "o", color="black", markersize=3)
        else:
            ax.hlines(v, float(a), float(b), color="tab:blue")
    ax.set_xlabel("theta / pi")
    ax.set_ylabel("sigma")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def cmd_rho(args) -> int:
    K = _descriptor(args.knot, args.matrix)
    print(_fmt(rho_abelian(K, args.order)))
    return EXIT_OK


def cmd_alexander(args) -> int:
    ring = Ring.mod(args.mod) if args.mod else QQ
    path = Path(args.source)
    if path.suffix == ".json" and path.is_file():
        doc = json.loads(path.read_text())
        if "matrix" in doc:
            mod = module_from_seifert(SeifertMatrix.from_json(doc), ring)
        else:
            mod = alexander_from_presentation(GroupPresentation.from_json(doc), ring)
    elif path.is_file():
        mod = alexander_from_presentation(GroupPresentation.load(path), ring)
    else:
        try:
            mod = module_from_seifert(lookup(args.source), ring)
        except KeyError:
            mod = alexander_from_presentation(GroupPresentation.parse(args.source), ring)
    doc = mod.to_json()
    doc["invariant_factors_text"] = [str(d) for d in mod.invariant_factors]
    _emit(doc)
    return EXIT_OK


def cmd_blanchfield(args) -> int:
    ring = Ring.parse(args.ring)
    A = _load_matrix(args.matrix)
    if args.pair:
        x, y = (_vector(p, ring) for p in args.pair)
        v = blanchfield_pair(A, ring, x, y)
        _emit({"value": str(v), **v.to_json()})
        return EXIT_OK
    if args.generates:
        ok = generates(A, ring, _vector(args.generates, ring))
        _emit({"generates": ok})
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.nonsingular:
        ok = is_nonsingular(A, ring)
        _emit({"nonsingular": ok})
        return EXIT_OK if ok else EXIT_NEGATIVE
    _emit(module_from_seifert(A, ring).to_json())
    return EXIT_OK


def cmd_family_build(args) -> int:
    spec = FamilySpec.load(args.spec)
    try:
        cert = solve_family(spec)
    except Infeasible as exc:
        _emit({"status": "Infeasible", "message": str(exc), "violated": list(exc.violated)})
        return EXIT_NEGATIVE
    if args.output:
        cert.save(args.output)
    else:
        _emit(cert.to_json())
    print(f"built {len(cert.knots)} knot(s); margin {cert.margin}", file=sys.stderr)
    return EXIT_OK


def cmd_family_verify(args) -> int:
    cert = FamilyCertificate.load(args.cert)
    spec = FamilySpec.load(args.spec)
    report = verify_family(cert, spec)
    for name, detail in report.failures:
        print(f"FAILED {name}: {detail}", file=sys.stderr)
    _emit({"ok": report.ok, "failures": [{"name": n, "detail": d} for n, d in report.failures],
           "checked": len(report.checks)})
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    cert = FamilyCertificate.load(args.cert)
    spec = FamilySpec.load(args.spec)
    coeffs = [int(c) for c in args.coeffs.split(",") if c.strip()]
    try:
        report = nonsolvability_certificate(cert, spec, coeffs)
    except MarginViolated as exc:
        doc = exc.report.to_json() if exc.report is not None else {"status": "MarginViolated"}
        _emit(doc)
        print(f"MarginViolated: {exc}")
        return EXIT_NEGATIVE
    _emit(report.to_json())
    print(f"PASS margin={report.margin}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotconc", description="Exact knot concordance invariants and certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    def knot_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("knot", help="Seifert matrix JSON file, catalog name or descriptor expression")
        p.add_argument("--matrix", action="append", default=[], help="extra Seifert matrix file usable as an atom")
        return p

    p = knot_cmd("invariants", "Alexander polynomial, Arf, determinant and signatures")
    p.add_argument("--at", action="append", help="point as r/q turns (repeatable; default -1)")
    p.set_defaults(func=cmd_invariants)

    p = knot_cmd("sigfn", "signature step-function table")
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.add_argument("--sampled", action="store_true", help="allow irrational jump angles (sampled form)")
    p.set_defaults(func=cmd_sigfn)

    p = knot_cmd("rho", "abelian rho-invariant")
    p.add_argument("--order", required=True, help="positive integer or 'inf'")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("alexander", help="invariant factors of the Alexander module")
    p.add_argument("source", help="presentation text file, presentation/matrix JSON, or catalog name")
    p.add_argument("--mod", type=int, help="work over Z/p instead of Q")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("blanchfield", help="Blanchfield pairing and module predicates")
    p.add_argument("matrix")
    p.add_argument("--ring", default="q")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pair", nargs=2, metavar=("X", "Y"))
    g.add_argument("--generates", metavar="X")
    g.add_argument("--nonsingular", action="store_true")
    p.set_defaults(func=cmd_blanchfield)

    fam = sub.add_parser("family", help="build or verify a family certificate")
    fsub = fam.add_subparsers(dest="family_command", required=True)
    p = fsub.add_parser("build")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family_build)
    p = fsub.add_parser("verify")
    p.add_argument("cert")
    p.add_argument("spec")
    p.set_defaults(func=cmd_family_verify)

    p = sub.add_parser("certify", help="non-solvability report for a linear combination")
    p.add_argument("cert")
    p.add_argument("spec")
    p.add_argument("--coeffs", required=True, help="comma-separated integers a_1,a_2,...")
    p.set_defaults(func=cmd_certify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KnotconcError, ValueError, KeyError, OSError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
