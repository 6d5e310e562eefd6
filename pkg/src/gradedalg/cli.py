"""Command-line front end.

Subcommands: radical, decompose, codim, check-identity, verify, builtin.
Exit codes: 0 ok, 1 usage, 2 parse error, 3 invariant violation, 4 resource
cap. Reports go to stdout; --json-out also writes a deterministic JSON report.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ASSOCIATIVE, GradedAlgebra
from .builders import builtin, builtin_names
from .errors import (DimensionMismatchError, GroupMismatchError,
                     NotAnIdealError, NotGradedError, ResourceCapError,
                     SchemaError, ValidationError)
from .identities import (DEFAULT_MAX_BLOCKS, DEFAULT_MAX_N, codimension_report,
                         is_graded_identity)
from .radical import graded_radical_report, jacobson_radical
from .schema import (algebra_to_description, canonical_json,
                     description_to_algebra, digest, load_json,
                     poly_from_description, render_rational)
from .structure import (levi_graded, malcev_complement_graded,
                        wedderburn_artin_graded)
from . import radical as radical_mod
from .algebra import algebra_on_subspace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_CAP = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_algebra(args) -> tuple[GradedAlgebra, dict]:
    if args.builtin:
        A = builtin(args.builtin)
        desc = algebra_to_description(A)
    else:
        desc = load_json(args.input)
        A = description_to_algebra(desc)
    return A, desc


def _emit(report: dict, json_out: str | None):
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(canonical_json(report))
            fh.write("\n")


def _degree_names(A: GradedAlgebra, sub) -> list:
    degs = []
    for v in sub.basis_vectors():
        g = A.degree_of(v)
        degs.append(repr(g) if g is not None else "mixed")
    return degs


def cmd_radical(args) -> int:
    A, desc = _load_algebra(args)
    reports = graded_radical_report(A)
    out = {"command": "radical", "input_digest": digest(desc), "name": A.name,
           "results": []}
    for r in reports:
        print(r.summary())
        entry = {"kind": r.kind, "dim": r.radical.dim, "graded": r.graded,
                 "nilpotency_index": r.nilpotency,
                 "basis": [[render_rational(c) for c in row]
                           for row in r.radical.basis_vectors()]}
        if r.witness is not None:
            entry["witness"] = [render_rational(c) for c in r.witness]
            print("  witness:", entry["witness"])
        out["results"].append(entry)
    _emit(out, args.json_out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    A, desc = _load_algebra(args)
    out = {"command": "decompose", "input_digest": digest(desc), "name": A.name,
           "results": {}}
    if A.kind == ASSOCIATIVE:
        J = jacobson_radical(A)
        out["results"]["radical_dim"] = J.dim
        if J.is_zero():
            semi = A
            print(f"semisimple: dim {A.dim}")
        else:
            B = malcev_complement_graded(A)
            print(f"radical dim {J.dim}; graded complement dim {B.dim}")
            out["results"]["complement_dim"] = B.dim
            emb = algebra_on_subspace(A, B, name="complement")
            semi = emb.algebra
        dec = wedderburn_artin_graded(semi)
        dims = dec.dims()
        print(f"graded-simple components: {len(dims)} with dims {dims}")
        comps = []
        for c in dec.components:
            degs = sorted(set(_degree_names(semi, c)))
            comps.append({"dim": c.dim, "degrees": degs})
            print(f"  component dim {c.dim}, degrees {degs}")
        out["results"]["components"] = comps
    else:
        R = radical_mod.solvable_radical(A)
        B = levi_graded(A)
        print(f"solvable radical dim {R.dim}; graded Levi subalgebra dim {B.dim}")
        out["results"]["radical_dim"] = R.dim
        out["results"]["levi_dim"] = B.dim
    out["results"]["verified"] = True
    _emit(out, args.json_out)
    return EXIT_OK


def cmd_codim(args) -> int:
    A, desc = _load_algebra(args)
    modes = ["gr", "h"] if args.mode == "both" else [args.mode]
    out = {"command": "codim", "input_digest": digest(desc), "name": A.name,
           "n_max": args.n_max, "results": {}}
    for mode in modes:
        rep = codimension_report(A, args.n_max, mode=mode,
                                 predicted_d=args.predicted_d,
                                 max_n=args.max_n, max_blocks=args.max_blocks)
        print(f"mode {mode}:")
        print(f"  {'n':>3} {'c_n':>10} {'root':>10} {'ratio':>12}")
        for i, v in enumerate(rep.values):
            ratio = ""
            if i > 0 and rep.ratios[i - 1] is not None:
                ratio = str(rep.ratios[i - 1])
            print(f"  {i + 1:>3} {v:>10} {rep.roots[i]:>10} {ratio:>12}")
        entry = {"values": rep.values, "roots": rep.roots,
                 "ratios": [str(r) if r is not None else None for r in rep.ratios],
                 "per_n": rep.per_n, "shortcut_n": rep.shortcuts}
        if rep.verdict is not None:
            v = rep.verdict
            entry["verdict"] = {
                "predicted": v.predicted, "nilpotent": v.nilpotent,
                "consistent": v.consistent, "lower_power": v.lower_power,
                "upper_power": v.upper_power,
                "lower_const": str(v.lower_const) if v.lower_const is not None else None,
                "upper_const": str(v.upper_const) if v.upper_const is not None else None,
                "message": v.message}
            print(f"  verdict: {v.message}")
        out["results"][mode] = entry
    _emit(out, args.json_out)
    return EXIT_OK


def cmd_check_identity(args) -> int:
    A, desc = _load_algebra(args)
    pobj = load_json(args.poly)
    poly = poly_from_description(pobj, A)
    verdict = is_graded_identity(poly, A)
    print("identity" if verdict else "not an identity")
    out = {"command": "check-identity", "input_digest": digest(desc),
           "poly_digest": digest(pobj), "results": {"identity": verdict}}
    _emit(out, args.json_out)
    return EXIT_OK


def cmd_verify(args) -> int:
    A, desc = _load_algebra(args)
    reports = graded_radical_report(A)
    ok = all(r.graded for r in reports)
    for r in reports:
        print(r.summary())
    print("all radical gradedness checks passed" if ok else "FAILED")
    out = {"command": "verify", "input_digest": digest(desc), "name": A.name,
           "results": {"passed": ok,
                       "reports": [{"kind": r.kind, "dim": r.radical.dim,
                                    "graded": r.graded,
                                    "nilpotency_index": r.nilpotency}
                                   for r in reports]}}
    _emit(out, args.json_out)
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_builtin(args) -> int:
    A = builtin(args.name)
    desc = algebra_to_description(A)
    text = json.dumps(desc, indent=2, sort_keys=True)
    print(text)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text)
            fh.write("\n")
    return EXIT_OK


def _add_input_opts(p: _Parser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="path to an algebra description JSON file")
    src.add_argument("--builtin", help=f"builtin name ({', '.join(builtin_names())})")
    p.add_argument("--json-out", help="write a machine-readable JSON report here")


def build_parser() -> _Parser:
    p = _Parser(prog="gradedalg",
                description="exact computations with group-graded algebras")
    sub = p.add_subparsers(dest="cmd", required=True)

    pr = sub.add_parser("radical", help="radical dims, gradedness, nilpotency index")
    _add_input_opts(pr)
    pr.set_defaults(func=cmd_radical)

    pd = sub.add_parser("decompose", help="graded-simple components / complements")
    _add_input_opts(pd)
    pd.set_defaults(func=cmd_decompose)

    pc = sub.add_parser("codim", help="codimension sequence table")
    _add_input_opts(pc)
    pc.add_argument("--n-max", type=int, default=3)
    pc.add_argument("--mode", choices=("gr", "h", "both"), default="gr")
    pc.add_argument("--predicted-d", type=int, default=None)
    pc.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                    help="hard cap on n (resource guard)")
    pc.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS,
                    help="hard cap on the number of degree assignments per n")
    pc.set_defaults(func=cmd_codim)

    pi = sub.add_parser("check-identity", help="test a multilinear graded polynomial")
    _add_input_opts(pi)
    pi.add_argument("--poly", required=True, help="polynomial description JSON file")
    pi.set_defaults(func=cmd_check_identity)

    pv = sub.add_parser("verify", help="run the radical gradedness checks")
    _add_input_opts(pv)
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("builtin", help="print a builtin algebra description")
    pb.add_argument("name")
    pb.add_argument("--json-out")
    pb.set_defaults(func=cmd_builtin)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, NotAnIdealError, NotGradedError,
            GroupMismatchError, DimensionMismatchError) as exc:
        print(f"invariant violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    raise SystemExit(main())
