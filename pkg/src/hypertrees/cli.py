"""Command-line front end.

Exit codes: 0 success or claim holds, 1 claim fails, 2 bad input or unmet
precondition, 3 search budget or size guard hit.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from hypertrees import bounds, enumeration, generators, khg
from hypertrees.berge import berge_forest_identity, from_uniform, lovasz_inequality
from hypertrees.core import tight_line_graph
from hypertrees.errors import BudgetExceeded, InputError, PreconditionError, SizeError
from hypertrees.recognition import classify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

EXPECTATIONS = {
    "hypertree": lambda r: r.hypertree,
    "not-hypertree": lambda r: not r.hypertree,
    "chain-connected": lambda r: r.chain_connected,
    "semicycle-free": lambda r: r.semicycle_free,
    "edge-minimal": lambda r: bool(r.edge_minimal),
    "edge-maximal": lambda r: bool(r.edge_maximal),
    "line-graph-connected": lambda r: r.line_graph_connected,
}


def _read(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return khg.parse_khg(text)


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "b-construction":
        if not args.base:
            raise InputError("b-construction needs --base FILE")
        H = generators.b_construction(_read(args.base))
    elif fam == "fano":
        H = generators.fano_plane()
    elif fam == "five-vertex":
        H = generators.five_vertex_hypertree()
    elif fam in ("small-counterexample", "cluster-counterexample", "odd-cluster-counterexample"):
        H = generators.FAMILIES[fam](_need(args.k, "--k"))
    elif fam == "non-hypertree-cc":
        H = generators.non_hypertree_cc(_need(args.n, "--n"))
    elif fam == "l-flower":
        H = generators.l_flower(_need(args.n, "--n"), _need(args.k, "--k"), _need(args.l, "--l"))
    elif fam == "random-semicycle-free":
        H = generators.random_semicycle_free(_need(args.n, "--n"), _need(args.k, "--k"), args.seed)
    else:
        H = generators.FAMILIES[fam](_need(args.n, "--n"), _need(args.k, "--k"))
    _write(khg.serialize_khg(H, comment=f"family {fam}"), args.output)
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise InputError(f"this family needs {flag}")
    return value


def cmd_check(args) -> int:
    H = _read(args.file)
    report = classify(H, args.budget)
    attached = []
    if report.chain_connected:
        attached.append(bounds.check_lower_bound(H, args.budget))
    try:
        attached.append(bounds.check_upper_bound(H, args.budget))
    except PreconditionError:
        pass
    report = dataclasses.replace(report, bounds=tuple(attached))
    if args.report == "json":
        print(khg.emit_report(report))
    else:
        for key in ("n", "k", "m", "chain_connected", "semicycle_free", "hypertree",
                    "edge_minimal", "edge_maximal", "max_chain_length", "line_graph_components"):
            print(f"{key}: {getattr(report, key)}")
        print(f"focus_vertices: {sorted(report.focus_vertices)}")
    if args.expect:
        return EXIT_OK if EXPECTATIONS[args.expect](report) else EXIT_FAIL
    return EXIT_OK


def cmd_bounds(args) -> int:
    H = _read(args.file)
    if args.l_hypertree is not None:
        reports = [bounds.check_l_hypertree_bound(H, args.l_hypertree, args.budget)]
    elif args.lower:
        reports = [bounds.check_lower_bound(H, args.budget)]
    elif args.upper:
        reports = [bounds.check_upper_bound(H, args.budget)]
    else:
        reports = [bounds.check_lower_bound(H, args.budget), bounds.check_upper_bound(H, args.budget)]
    print(khg.emit_report(reports if len(reports) > 1 else reports[0]))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_enumerate(args) -> int:
    st = enumeration.enumerate_all(
        args.n, args.k, workers=args.workers, checkpoint=args.checkpoint,
        cover_only=args.cover_only, oracle_fraction=args.oracle_fraction,
        seed=args.seed, max_universe=args.max_universe, iso=args.iso,
    )
    print(khg.emit_report(st))
    bad = (st.lower_bound_violations + st.upper_bound_violations + st.cycle_without_semicycle
           + st.class_cover_failures + st.oracle_disagreements + st.self_intersecting_in_semicycle_free)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_probe(args) -> int:
    probe = enumeration.conjecture_probe(args.n, args.k, workers=args.workers, max_universe=args.max_universe)
    out = khg.report_dict(probe)
    out["status"] = "conjectural bounds: measured, not asserted"
    print(khg.json.dumps(out, indent=2))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _write(khg.export_dot(tight_line_graph(_read(args.file))), args.output)
    return EXIT_OK


def cmd_berge(args) -> int:
    G = from_uniform(_read(args.file))
    code = EXIT_OK
    out = {}
    if args.identity or not args.lovasz:
        ident = berge_forest_identity(G, args.budget)
        out["identity"] = khg.report_dict(ident)
        code = code if ident.consistent else EXIT_FAIL
    if args.lovasz or not args.identity:
        lov = lovasz_inequality(G, args.budget)
        out["lovasz"] = khg.report_dict(lov)
        code = code if lov.holds in (None, True) else EXIT_FAIL
    print(khg.json.dumps(out, indent=2))
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypertrees", description="k-uniform hypertree toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a named construction as .khg")
    g.add_argument("family", choices=sorted(list(generators.FAMILIES) + ["b-construction"]))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--base", help="base .khg file for b-construction")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="classify a hypergraph")
    c.add_argument("file")
    c.add_argument("--expect", choices=sorted(EXPECTATIONS))
    c.add_argument("--report", choices=["text", "json"], default="text")
    c.add_argument("--budget", type=int)
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bounds", help="check edge-count bounds")
    b.add_argument("file")
    mode = b.add_mutually_exclusive_group()
    mode.add_argument("--lower", action="store_true")
    mode.add_argument("--upper", action="store_true")
    mode.add_argument("--l-hypertree", type=int, metavar="L")
    b.add_argument("--budget", type=int)
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("enumerate", help="classify every edge set on n vertices")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--checkpoint")
    e.add_argument("--cover-only", action="store_true")
    e.add_argument("--oracle-fraction", type=float, default=0.0)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--max-universe", type=int, default=enumeration.MAX_UNIVERSE)
    e.add_argument("--iso", action="store_true", help="also count isomorphism classes (n <= 8)")
    e.set_defaults(func=cmd_enumerate)

    pc = sub.add_parser("probe-conjectures", help="measure extremal edge counts")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--workers", type=int, default=1)
    pc.add_argument("--max-universe", type=int, default=enumeration.MAX_UNIVERSE)
    pc.set_defaults(func=cmd_probe)

    d = sub.add_parser("export-dot", help="tight line graph in DOT format")
    d.add_argument("file")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)

    bg = sub.add_parser("berge", help="Berge-cycle edge-count checks")
    bg.add_argument("file")
    bg.add_argument("--identity", action="store_true")
    bg.add_argument("--lovasz", action="store_true")
    bg.add_argument("--budget", type=int)
    bg.set_defaults(func=cmd_berge)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, SizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
