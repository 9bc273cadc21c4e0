"""Command line interface: ``expanse expand|check|invariants|ideal|verify|enumerate``."""

from __future__ import annotations

import argparse
import json
import sys

from expanse.complex import Vertex, format_facet_list, read_complex
from expanse.expansion import as_alpha, expand
from expanse.harness import ALL_CHECKS, CorpusSpec, enumerate_complexes, run_report
from expanse.homology import reduced_homology
from expanse.ideals import (
    MonomialIdeal, alexander_dual_ideal, colon_split, complex_of, facet_ideal, format_ideal,
    is_k_decomposable_ideal, k_decomposition_tree, linear_quotients_order, parse_ideal,
    stanley_reisner_ideal,
)
from expanse.invariants import betti_table, big_height, depth, projective_dimension, regularity
from expanse.linalg import Field
from expanse.properties import PROPERTIES


def _fields(text: str | None, default: str) -> list[Field]:
    return [Field.parse(t) for t in (text or default).split(",") if t.strip()]


def _jsonable(obj):
    if isinstance(obj, Vertex):
        return str(obj)
    if isinstance(obj, (frozenset, set)):
        return sorted(_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, Field):
        return str(obj)
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_ideal(path: str) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


# -- subcommands ------------------------------------------------------------------

def cmd_expand(args) -> int:
    cx = read_complex(args.file)
    alpha = as_alpha(args.alpha)
    _emit(format_facet_list(expand(cx, alpha)), args.out)
    return 0


def cmd_check(args) -> int:
    cx = read_complex(args.file)
    fn = PROPERTIES[args.property]
    records = []
    if args.property == "k-decomposable":
        k = args.k if args.k is not None else cx.dim()
        records.append(fn(cx, k))
    elif args.property in ("euler", "shellable", "clean"):
        records.append(fn(cx))
    else:
        records.extend(fn(cx, f) for f in _fields(args.field, "q"))
    lines = []
    for v in records:
        rec = {"property": v.name, "result": v.result, "field": _jsonable(v.field),
               "witness": _jsonable(v.witness), "exhaustive": v.exhaustive, "method": v.method}
        if args.property == "k-decomposable":
            rec["k"] = args.k if args.k is not None else cx.dim()
        lines.append(json.dumps(rec, ensure_ascii=False))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_invariants(args) -> int:
    cx = read_complex(args.file)
    parts = []
    for f in _fields(args.field, "q"):
        table = betti_table(cx, f)
        rec = {
            "field": str(f),
            "f_vector": cx.f_vector(),
            "reduced_homology": list(reduced_homology(cx, f).ranks),
            "betti": table.rows(),
            "reg_quotient": regularity(cx, f, module="quotient"),
            "reg_ideal": regularity(cx, f),
            "pd": projective_dimension(cx, f),
            "depth": depth(cx, f),
            "bight": big_height(cx),
        }
        parts.append(json.dumps(rec))
    _emit("\n".join(parts) + "\n", args.out)
    return 0


def cmd_ideal(args) -> int:
    action = args.action
    if action in ("sr", "facet"):
        cx = read_complex(args.input)
        ideal = stanley_reisner_ideal(cx) if action == "sr" else facet_ideal(cx)
        _emit(format_ideal(ideal), args.out)
        return 0
    ideal = _read_ideal(args.input)
    if action == "dual":
        _emit(format_ideal(alexander_dual_ideal(ideal)), args.out)
    elif action == "complex":
        _emit(format_facet_list(complex_of(ideal)), args.out)
    elif action == "split":
        if not args.u:
            raise SystemExit("ideal split needs --u")
        lower, upper = colon_split(ideal, args.u)
        _emit(json.dumps({"I_u": [str(g) for g in lower], "I^u": [str(g) for g in upper]}) + "\n", args.out)
    elif action == "kdec":
        k = 0 if args.k is None else args.k
        rec = {"k": k, "result": is_k_decomposable_ideal(ideal, k),
               "tree": _jsonable(k_decomposition_tree(ideal, k))}
        _emit(json.dumps(rec) + "\n", args.out)
    elif action == "linear-quotients":
        order = linear_quotients_order(ideal)
        rec = {"result": order is not None,
               "order": None if order is None else [[str(g), sorted(str(v) for v in s)] for g, s in order]}
        _emit(json.dumps(rec) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    theorems = ALL_CHECKS if args.theorems == "all" else tuple(t.strip().upper() for t in args.theorems.split(","))
    spec = CorpusSpec(args.mode, args.max_vertices, args.max_copies, args.samples, args.seed,
                      args.min_vertices)
    report = run_report(spec, theorems, _fields(args.field, "q,2"), out=args.out, jobs=args.jobs)
    if not args.out:
        for line in report.lines():
            print(line)
    print(report.table_text(), end="")
    for t in ("REGS", "DEPTH"):
        if t in theorems:
            w = report.equality_witness(t)
            if w is not None:
                print(f"equality in {t}: complex={w.complex} alpha={w.alpha} field={w.field} lhs={w.lhs} rhs={w.rhs}")
    failures = report.failures
    if failures:
        print(f"{len(failures)} failing case(s)", file=sys.stderr)
        return 1
    return 0


def cmd_enumerate(args) -> int:
    out = []
    count = 0
    for cx in enumerate_complexes(args.n):
        count += 1
        out.append(" | ".join(" ".join(str(v) for v in sorted(f)) for f in cx.facets))
    out.append(f"# {count} complexes on {args.n} vertices")
    _emit("\n".join(out) + "\n", args.out)
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="coefficient field(s): q, 2, 3, ... (comma separated)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="expanse", description="Expansions of simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print the expansion of a complex")
    p.add_argument("file")
    p.add_argument("--alpha", required=True, help="copy counts, e.g. 2,1,1")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", parents=[common], help="decide a property")
    p.add_argument("property", choices=sorted(PROPERTIES))
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", parents=[common], help="Betti table, reg, pd, depth")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("ideal", parents=[common], help="monomial ideal operations")
    p.add_argument("action", choices=["sr", "facet", "dual", "complex", "split", "kdec", "linear-quotients"])
    p.add_argument("input", help="facet list (sr, facet) or ideal file")
    p.add_argument("--u", help="monomial for split")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify", parents=[common], help="check the expansion theorems on a corpus")
    p.add_argument("--theorems", default="all", help=f"comma separated subset of {','.join(ALL_CHECKS)}")
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--min-vertices", type=int)
    p.add_argument("--max-copies", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list every complex on n vertices")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"expanse: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
