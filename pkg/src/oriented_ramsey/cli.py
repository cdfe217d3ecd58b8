"""Command-line interface.

Exit codes: 0 success, 1 property fails (a certificate was found or a check
failed), 2 usage or parse error, 3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bnd
from .constructions import WITNESSES, build_circulant, parse_circulant_spec, witness_info
from .detectors import (
    check_eight_vertex_properties,
    check_l3_degree_bound,
    check_neighborhood_lemma,
    independence_number,
    is_free,
)
from .digraph import ArcListFormatError, GraphError, arc_count, format_arc_list, read_arc_list
from .search import MODES, SearchAborted, SearchConfig, cayley_scan, extremal_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


# -- verify -----------------------------------------------------------------


def _verify_one(name: str) -> dict:
    info = witness_info(name)
    g = build_circulant(info.spec)
    verdict = is_free(g, info.m, info.n)
    checks = [check_neighborhood_lemma(g, info.m, info.n)]
    if info.n == 3:
        checks.append(check_l3_degree_bound(g, info.m))
    if g.order == 8 and (info.m, info.n) == (3, 3):
        checks.append(check_eight_vertex_properties(g))
    return {
        "witness": info.name,
        "spec": info.spec.to_text(),
        "order": g.order,
        "m": info.m,
        "n": info.n,
        "free": verdict.free,
        "certificate": verdict.certificate.to_dict() if verdict.certificate else None,
        "arc_count": arc_count(g),
        "out_degrees": [g.out_degree(v) for v in range(g.order)],
        "in_degrees": [g.in_degree(v) for v in range(g.order)],
        "independence_number": independence_number(g),
        "checks": [
            {"name": c.name, "passed": c.passed, "violations": c.violations} for c in checks
        ],
        "passed": verdict.free and all(c.passed for c in checks),
    }


def cmd_verify(args) -> int:
    if args.witness.lower() == "all":
        names = list(WITNESSES)
    elif args.witness.upper() in WITNESSES:
        names = [args.witness.upper()]
    else:
        return _usage_error(f"unknown witness {args.witness!r}; expected w8, w14, w22 or all")
    sections = [_verify_one(name) for name in names]
    ok = all(s["passed"] for s in sections)
    if args.format == "json":
        _emit(args, _dump({"passed": ok, "witnesses": sections}))
    else:
        lines = []
        for s in sections:
            lines.append(f"[{s['witness']}] {s['spec']}")
            lines.append(
                f"  order {s['order']}, {s['arc_count']} arcs, independence number {s['independence_number']}"
            )
            lines.append(f"  (I_{s['m']}, L_{s['n']})-free: {'yes' if s['free'] else 'NO'}")
            degs = sorted(set(zip(s["out_degrees"], s["in_degrees"])))
            lines.append("  degree pairs (out, in): " + ", ".join(f"{a},{b}" for a, b in degs))
            for c in s["checks"]:
                lines.append(f"  {c['name']}: {'pass' if c['passed'] else 'FAIL'}")
                lines.extend(f"    {v}" for v in c["violations"])
        lines.append("all checks passed" if ok else "some checks FAILED")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- check ------------------------------------------------------------------


def cmd_check(args) -> int:
    try:
        g = read_arc_list(args.file)
    except ArcListFormatError as exc:
        return _usage_error(f"{args.file}: {exc}")
    except (OSError, UnicodeDecodeError) as exc:
        return _usage_error(f"{args.file}: {exc}")
    verdict = is_free(g, args.m, args.n)
    cert = verdict.certificate
    if args.format == "json":
        _emit(args, _dump({
            "order": g.order,
            "m": args.m,
            "n": args.n,
            "free": verdict.free,
            "certificate": cert.to_dict() if cert else None,
        }))
    elif verdict.free:
        _emit(args, f"free: no I_{args.m} and no L_{args.n}\n")
    else:
        _emit(args, f"not free: {cert.kind} {' '.join(map(str, cert.vertices))}\n")
    return EXIT_OK if verdict.free else EXIT_FAIL


# -- construct --------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        if args.witness:
            spec = witness_info(args.witness).spec
        else:
            spec = parse_circulant_spec(args.spec)
        g = build_circulant(spec)
    except KeyError as exc:
        return _usage_error(str(exc.args[0]))
    except (ValueError, GraphError) as exc:
        return _usage_error(str(exc))
    if args.format == "json":
        _emit(args, _dump({"spec": spec.to_text(), "order": g.order, "arcs": [list(a) for a in g.arcs()]}))
    else:
        _emit(args, format_arc_list(g))
    return EXIT_OK


# -- bounds -----------------------------------------------------------------


def cmd_bounds(args) -> int:
    if not (2 <= args.m_max <= 20 and 2 <= args.n_max <= 20):
        return _usage_error("--m-max and --n-max must lie in 2..20")
    rows = bnd.bounds_grid(args.m_max, args.n_max)
    if args.format == "csv":
        _emit(args, bnd.bounds_to_csv(rows))
    elif args.format == "json":
        _emit(args, bnd.bounds_to_json(rows))
    else:
        lines = [f"{'m':>3} {'n':>3} {'lower':>10} {'upper':>12}  exact  sources"]
        for r in rows:
            upper = str(r.upper) if r.upper < 10 ** 12 else f"~2^{r.upper.bit_length() - 1}"
            lines.append(
                f"{r.m:>3} {r.n:>3} {r.lower:>10} {upper:>12}  {'yes' if r.exact else 'no ':>5}  "
                f"{r.lower_src} / {r.upper_src}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# -- search / cayley --------------------------------------------------------


def _search_text(report) -> str:
    lines = [f"(I_{report.m}, L_{report.n})-free classes by order:"]
    for lv in report.per_order:
        mark = "" if lv.complete else " (partial)"
        lines.append(f"  {lv.order:>2}: {lv.classes}{mark}")
    lines.append(f"extremal order: {report.extremal_order}")
    if report.ramsey_number is not None:
        lines.append(f"r(I_{report.m}, L_{report.n}) = {report.ramsey_number}")
    lines.append(f"representatives at order {report.extremal_order}:")
    for rep in report.representatives:
        lines.append("  " + rep.rstrip("\n").replace("\n", "; "))
    return "\n".join(lines) + "\n"


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(
            args.m, args.n, args.max_order, mode=args.mode, worker_count=args.threads,
            degree_cap_enabled=not args.no_degree_cap, class_cap=args.class_cap,
        )
    except ValueError as exc:
        return _usage_error(str(exc))

    def progress(order, classes):
        print(f"order {order}: {classes} classes", file=sys.stderr, flush=True)

    status = EXIT_OK
    try:
        report = extremal_search(cfg, progress)
    except SearchAborted as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        report = exc.report
        status = EXIT_GUARD
    if args.format == "json":
        _emit(args, report.to_json())
    else:
        _emit(args, _search_text(report))
    return status


def cmd_cayley(args) -> int:
    try:
        report = cayley_scan(args.group, args.order, args.m, args.n)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "json":
        _emit(args, _dump(report.to_dict()))
    else:
        lines = [
            f"{report.group} group of order {report.order}: {report.scanned} oriented Cayley digraphs scanned",
            f"(I_{report.m}, L_{report.n})-free: {report.free}",
        ]
        lines.extend("  S = {" + ", ".join(s) + "}" for s in report.free_connection_sets)
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the result here instead of standard output")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes; 1 forces the sequential path")

    parser = argparse.ArgumentParser(prog="oriented-ramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the named witnesses")
    p.add_argument("witness", help="w8, w14, w22 or all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", parents=[common], help="test a graph file for (I_m, L_n)-freeness")
    p.add_argument("file")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="build a circulant graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--witness")
    group.add_argument("--spec", help="e.g. 'k=14; all=+1,-2; even=+4; odd=-6'")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", parents=[common], help="table of best known bounds")
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", parents=[common], help="exhaustive isomorph-free search")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-order", type=_positive, required=True)
    p.add_argument("--mode", choices=MODES, default="count-classes")
    p.add_argument("--no-degree-cap", action="store_true")
    p.add_argument("--class-cap", type=_positive, default=10 ** 7)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cayley", parents=[common], help="scan Cayley digraphs for freeness")
    p.add_argument("--group", choices=("cyclic", "dihedral"), required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_cayley)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format == "csv" and args.command != "bounds":
        return _usage_error("--format csv is only available for bounds")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
