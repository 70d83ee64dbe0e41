"""Command-line interface.

Exit codes: 0 success, 1 infeasible / unsatisfiable / mismatch, 2 input
error, 3 oracle budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .cnf import parse_dimacs
from .errors import BudgetExceeded, DisconnectedGraph, GraphError, InvalidK, ParseError
from .indicators import di_sequence, format_exact, full_report
from .io import format_csv, format_json, load_graph, read_text
from .netgen import GeneratorSpec
from .oracle import (
    EnumerationBudget,
    brute_color_constrained,
    brute_diameter_sequences,
    interchange_budget_range,
)
from .pathfind import interchange_constrained_shortest_path
from .reduction import cnf_to_graph, extract_assignment, witness_path
from .verify import oracle_equivalence

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "KDIAMETER_ORACLE_MAX_NODES"


def _budget(args) -> EnumerationBudget:
    max_nodes = args.max_nodes
    if max_nodes is None:
        max_nodes = int(os.environ.get(BUDGET_ENV, EnumerationBudget.max_nodes))
    return EnumerationBudget(max_nodes=max_nodes)


def _seq_text(values) -> str:
    return " ".join("-" if v is None else format_exact(v) for v in values)


def cmd_indicators(args, out) -> int:
    g = load_graph(args.file)
    report = full_report(g, _budget(args), with_dc=not args.no_dc)
    if args.format == "json":
        out.write(json.dumps(report.to_dict(args.exact), indent=2, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        out.write(report.format_csv(args.exact))
    else:
        out.write(report.format_table(args.exact))
    return EXIT_OK


def cmd_di_seq(args, out) -> int:
    g = load_graph(args.file)
    seq = di_sequence(g)
    variance = format_exact(seq.variance) if args.exact else _decimal(seq.variance)
    if args.format == "json":
        payload = {
            "di": [None if v is None else format_exact(v) for v in seq.values],
            "saturation": seq.saturation,
            "variance": variance,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        out.write(f"# variance: {variance}\nk,di_k\n")
        for k, v in seq.items():
            out.write(f"{k},{'' if v is None else format_exact(v)}\n")
    else:
        out.write(f"{'k':>4}  di_k\n")
        for k, v in seq.items():
            out.write(f"{k:>4}  {'-' if v is None else format_exact(v)}\n")
        out.write(f"variance: {variance}\n")
    return EXIT_OK


def _decimal(x) -> str:
    from .indicators import format_decimal

    return format_exact(x) if x.denominator == 1 else format_decimal(x)


def cmd_path(args, out) -> int:
    g = load_graph(args.file)
    if args.color_constrained:
        path = brute_color_constrained(g, args.s, args.t, args.k, _budget(args), force=args.force)
    else:
        path = interchange_constrained_shortest_path(g, args.s, args.t, args.k)
    if path is None:
        if args.format == "json":
            out.write(json.dumps({"feasible": False}) + "\n")
        else:
            out.write("infeasible\n")
        return EXIT_NEGATIVE
    if args.format == "json":
        payload = {
            "feasible": True,
            "nodes": list(path.nodes),
            "lines": [g.color_names[c] for c in path.colors],
            "length": format_exact(path.total_length),
            "interchanges": path.interchanges,
            "distinct_colors": path.distinct_colors,
        }
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        out.write(f"path: {path.describe(g)}\n")
        out.write(f"length: {format_exact(path.total_length)}\n")
        out.write(f"interchanges: {path.interchanges}\n")
        out.write(f"distinct lines: {path.distinct_colors}\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = load_graph(args.file)
    budget = _budget(args)
    brute_di, brute_dc = brute_diameter_sequences(g, budget, force=args.force)
    seq = di_sequence(g)
    out.write(f"{'k':>4}  {'di_k search':>11}  {'di_k oracle':>11}  {'dc_k oracle':>11}\n")
    mismatches = 0
    ks = interchange_budget_range(g)
    for k in ks:
        fast = seq.value(k)
        slow = brute_di[k - 1]
        dc = brute_dc[k - 1] if k <= len(brute_dc) else brute_dc[-1]
        mark = "" if fast == slow else "  MISMATCH"
        mismatches += fast != slow
        cells = ["-" if v is None else format_exact(v) for v in (fast, slow, dc)]
        out.write(f"{k:>4}  {cells[0]:>11}  {cells[1]:>11}  {cells[2]:>11}{mark}\n")
    out.write(f"{len(ks) - mismatches}/{len(ks)} budgets agree\n")
    return EXIT_OK if mismatches == 0 else EXIT_NEGATIVE


def cmd_sat_reduce(args, out) -> int:
    f = parse_dimacs(read_text(args.file))
    inst = cnf_to_graph(f)
    g = inst.graph
    if args.emit_graph:
        Path(args.emit_graph).write_text(format_csv(g), encoding="utf-8")
    out.write(
        f"gadget: {g.n} nodes, {g.m} edges, {len(g.color_names)} labels, "
        f"s={inst.source} target={inst.target} k={inst.budget_k}\n"
    )
    if not args.decide:
        return EXIT_OK
    path = witness_path(inst, EnumerationBudget(max(g.n, _budget(args).max_nodes)))
    if path is None:
        out.write("UNSAT\n")
        return EXIT_NEGATIVE
    assignment = extract_assignment(inst, path)
    out.write("SAT\n")
    out.write("labels: " + " ".join(g.color_names[c] for c in path.colors) + "\n")
    out.write("assignment: " + " ".join(
        str(v if val else -v) for v, val in sorted(assignment.items())) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    g = GeneratorSpec.parse(args.spec).build()
    out.write(format_json(g) if args.format == "json" else format_csv(g))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    result = oracle_equivalence(args.seeds, args.start)
    agree = result.graphs - len({m.split(" ")[1] for m in result.mismatches})
    out.write(f"{agree}/{result.graphs} oracle-equivalent ({result.checks} (s,t,k) checks)\n")
    for line in result.mismatches[:20]:
        out.write(line + "\n")
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kdiameter",
        description="Interchange-constrained paths and diameters of transit networks.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_budget(sp):
        sp.add_argument("--max-nodes", type=int, default=None,
                        help=f"oracle node budget (default ${BUDGET_ENV} or 12)")

    sp = sub.add_parser("indicators", help="full indicator report")
    sp.add_argument("file", help="edge list (CSV or JSON); '-' for stdin")
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--exact", action="store_true", help="print rationals instead of decimals")
    sp.add_argument("--no-dc", action="store_true", help="skip the exhaustive dc sequence")
    with_budget(sp)
    sp.set_defaults(func=cmd_indicators)

    sp = sub.add_parser("di-seq", help="interchange-constrained diameter sequence")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--exact", action="store_true")
    sp.set_defaults(func=cmd_di_seq)

    sp = sub.add_parser("path", help="constrained shortest path between two nodes")
    sp.add_argument("file")
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("-t", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--color-constrained", action="store_true",
                    help="limit distinct lines instead of interchanges (exhaustive search)")
    sp.add_argument("--force", action="store_true", help="run the exhaustive search past the node budget")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    with_budget(sp)
    sp.set_defaults(func=cmd_path)

    sp = sub.add_parser("oracle", help="compare the search against exhaustive enumeration")
    sp.add_argument("file")
    sp.add_argument("--force", action="store_true")
    with_budget(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sat-reduce", help="build the SAT gadget graph from a DIMACS file")
    sp.add_argument("file")
    sp.add_argument("--decide", action="store_true", help="decide satisfiability via the gadget")
    sp.add_argument("--emit-graph", metavar="OUT", help="write the gadget as a CSV edge list")
    with_budget(sp)
    sp.set_defaults(func=cmd_sat_reduce)

    sp = sub.add_parser("gen", help="generate a network (paper:N, random:L,P,SEED, transit:N,L,SEED, chain:...)")
    sp.add_argument("spec")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="seeded search-vs-oracle equivalence sweep")
    sp.add_argument("--seeds", type=int, default=200)
    sp.add_argument("--start", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, GraphError, InvalidK, DisconnectedGraph, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
