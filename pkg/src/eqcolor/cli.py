"""Command-line interface.

Subcommands:

* compute    closed-form report (chi_eq, chi_eq_star, scans, bound)
* construct  build and emit a witness coloring
* verify     check a coloring file against a DIMACS graph
* graph      emit a DIMACS graph (product or companion multipartite)
* sweep      formula-vs-oracle agreement table over a parameter box

Exit codes: 0 success/feasible, 1 infeasible (or failed verification),
2 usage or domain error, 3 search budget exceeded.  The default search
budget is 10^7 nodes, overridable with --budget or EQCOLOR_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import colorer, oracle
from .closedform import ProductSpec, equitable_threshold_product
from .errors import FormatError, OutOfScopeError, SearchBudgetExceeded
from .graphs import (
    build_multipartite,
    build_product,
    coloring_from_text,
    coloring_to_json,
    coloring_to_slines,
    graph_from_dimacs,
    graph_to_dimacs,
    verify_coloring,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_ORACLE_CAP = 18


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError(f"part sizes must be positive, got {text!r}")
    return parts


def _default_budget() -> int:
    env = os.environ.get("EQCOLOR_BUDGET", "").strip()
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"EQCOLOR_BUDGET must be an integer, got {env!r}")
    return oracle.DEFAULT_BUDGET


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# compute


def cmd_compute(args) -> int:
    spec = ProductSpec(parts=args.parts, n=args.n)
    if args.oracle:
        return _compute_oracle(spec, args)
    if not spec.theorem_applicable:
        print(
            f"out of scope: sum(parts) = {spec.m} exceeds n = {spec.n}; "
            "the closed forms make no claim here. Rerun with --oracle for "
            "an exhaustive answer.",
            file=sys.stderr,
        )
        return EXIT_USAGE
    report = equitable_threshold_product(spec)
    if args.format == "json":
        _emit(_dump_json(report.to_json_dict(spec)), args.output)
        return EXIT_OK
    lines = [
        f"K_{{{','.join(map(str, spec.parts))}}} x K_{spec.n}  ({spec.m * spec.n} vertices)",
        f"  χ=  = {report.chi_eq}    (h = {report.h})",
        f"  χ=* = {report.chi_eq_star}    ({report.case}"
        + (f", h* = {report.h_star})" if report.h_star is not None else ")"),
        f"  χ=* bound = {report.lin_chang_bound}    (ceil(mn/(m+1)))",
    ]
    trace = report.condition_trace
    lines.append(
        "  case-1 test: floor reading "
        + ("fires" if trace["case1_floor_reading"] else "quiet")
        + ", ceiling reading "
        + ("fires" if trace["case1_ceiling_reading"] else "quiet")
    )
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _compute_oracle(spec: ProductSpec, args) -> int:
    g = build_product(spec)
    budget = args.budget
    try:
        chi = oracle.chi_eq_exact(g, budget=budget)
        star = oracle.chi_eq_star_exact(g, budget=budget)
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    payload = {
        "parts": list(spec.parts),
        "n": spec.n,
        "chi_eq": chi,
        "chi_eq_star": star,
        "source": "oracle",
    }
    if args.format == "json":
        _emit(_dump_json(payload), args.output)
    else:
        _emit(
            f"K_{{{','.join(map(str, spec.parts))}}} x K_{spec.n} (oracle)\n"
            f"  χ=  = {chi}\n  χ=* = {star}\n",
            args.output,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    spec = ProductSpec(parts=args.parts, n=args.n)
    try:
        coloring = colorer.color_product(spec, args.k, budget=args.budget)
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if coloring is None:
        print(
            f"infeasible: K_{{{','.join(map(str, spec.parts))}}} x K_{spec.n} "
            f"has no equitable {args.k}-coloring",
            file=sys.stderr,
        )
        return EXIT_INFEASIBLE
    if args.format == "json":
        _emit(coloring_to_json(coloring), args.output)
    elif args.format == "dimacs":
        _emit(coloring_to_slines(coloring), args.output)
    else:
        census = coloring.census
        sizes = ", ".join(str(census[c]) for c in sorted(census))
        _emit(
            f"equitable {args.k}-coloring of "
            f"K_{{{','.join(map(str, spec.parts))}}} x K_{spec.n}\n"
            f"class sizes: {sizes}\n"
            f"colors: {' '.join(map(str, coloring.assignment))}\n",
            args.output,
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    try:
        with open(args.graph) as fh:
            g = graph_from_dimacs(fh.read())
    except OSError as exc:
        print(f"cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"graph file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.coloring) as fh:
            coloring = coloring_from_text(fh.read())
    except OSError as exc:
        print(f"cannot read coloring: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"coloring file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = verify_coloring(g, coloring)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    print(str(result))
    return EXIT_OK if result.ok else EXIT_INFEASIBLE


# ---------------------------------------------------------------------------
# graph emission


def cmd_graph(args) -> int:
    spec = ProductSpec(parts=args.parts, n=args.n)
    g = build_multipartite(spec.blown_sizes) if args.multipartite else build_product(spec)
    _emit(graph_to_dimacs(g), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep


def _sweep_parts(max_r: int, max_part: int):
    """Nondecreasing part tuples: one representative per isomorphism class."""
    out = []

    def rec(prefix: tuple[int, ...], smallest: int):
        if prefix:
            out.append(prefix)
        if len(prefix) == max_r:
            return
        for p in range(smallest, max_part + 1):
            rec(prefix + (p,), p)

    rec((), 1)
    out.sort(key=lambda t: (len(t), t))
    return out


def run_sweep(
    max_r: int = 3,
    max_part: int = 2,
    max_n: int = 5,
    budget: int | None = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> dict:
    """Formula-vs-oracle sweep over all specs in the box.

    For every spec with sum(parts) <= n <= max_n and every k in [1, mn],
    formula feasibility (k equals chi_eq or k >= chi_eq_star) is compared
    with the oracle; instances above oracle_cap vertices or beyond budget
    are flagged as skipped, not as disagreements.  Per spec, the two
    readings of the first case-1 subcondition are checked against the
    oracle threshold.
    """
    specs_out = []
    disagreements = 0
    skipped = 0
    budget_exceeded = 0
    floor_bad = 0
    ceiling_bad = 0
    for parts in _sweep_parts(max_r, max_part):
        m = sum(parts)
        for n in range(m, max_n + 1):
            spec = ProductSpec(parts=parts, n=n)
            total = m * n
            floor_report = equitable_threshold_product(spec, "floor")
            ceiling_report = equitable_threshold_product(spec, "ceiling")
            use_oracle = total <= oracle_cap
            g = build_product(spec) if use_oracle else None
            rows = []
            oracle_feasible: dict[int, bool] = {}
            for k in range(1, total + 1):
                formula = k == floor_report.chi_eq or k >= floor_report.chi_eq_star
                row = {"k": k, "formula_feasible": formula}
                if not use_oracle:
                    row["oracle_feasible"] = None
                    row["agree"] = None
                    skipped += 1
                else:
                    try:
                        feasible = oracle.k_colorable(g, k, budget=budget).feasible
                    except SearchBudgetExceeded:
                        row["oracle_feasible"] = None
                        row["agree"] = None
                        row["budget_exceeded"] = True
                        budget_exceeded += 1
                        rows.append(row)
                        continue
                    oracle_feasible[k] = feasible
                    row["oracle_feasible"] = feasible
                    row["agree"] = feasible == formula
                    if not row["agree"]:
                        disagreements += 1
                rows.append(row)
            entry = {
                "parts": list(parts),
                "n": n,
                "report": floor_report.to_json_dict(spec),
                "rows": rows,
            }
            if len(oracle_feasible) == total:
                oracle_chi = min(k for k, f in oracle_feasible.items() if f)
                infeasible = [k for k, f in oracle_feasible.items() if not f]
                oracle_star = max(infeasible) + 1 if infeasible else 1
                entry["oracle"] = {"chi_eq": oracle_chi, "chi_eq_star": oracle_star}
                floor_ok = floor_report.chi_eq_star == oracle_star
                ceiling_ok = ceiling_report.chi_eq_star == oracle_star
                entry["case1_readings"] = {
                    "floor": {
                        "chi_eq_star": floor_report.chi_eq_star,
                        "agrees": floor_ok,
                    },
                    "ceiling": {
                        "chi_eq_star": ceiling_report.chi_eq_star,
                        "agrees": ceiling_ok,
                    },
                }
                floor_bad += not floor_ok
                ceiling_bad += not ceiling_ok
            else:
                entry["oracle"] = None
                entry["case1_readings"] = None
            specs_out.append(entry)
    return {
        "params": {
            "max_r": max_r,
            "max_part": max_part,
            "max_n": max_n,
            "oracle_cap": oracle_cap,
        },
        "specs": specs_out,
        "summary": {
            "spec_count": len(specs_out),
            "disagreements": disagreements,
            "rows_skipped": skipped,
            "rows_budget_exceeded": budget_exceeded,
            "floor_reading_mismatches": floor_bad,
            "ceiling_reading_mismatches": ceiling_bad,
        },
    }


def cmd_sweep(args) -> int:
    result = run_sweep(
        max_r=args.max_r,
        max_part=args.max_part,
        max_n=args.max_n,
        budget=args.budget,
        oracle_cap=args.oracle_cap,
    )
    if args.format == "json":
        _emit(_dump_json(result), args.output)
        return EXIT_OK
    lines = []
    for entry in result["specs"]:
        rep = entry["report"]
        feas = [str(r["k"]) for r in entry["rows"] if r["formula_feasible"]]
        status = "oracle skipped"
        if entry["oracle"]:
            bad = [r["k"] for r in entry["rows"] if r["agree"] is False]
            readings = entry["case1_readings"]
            marks = ",".join(
                name for name in ("floor", "ceiling") if readings[name]["agrees"]
            )
            status = f"oracle ok, readings ok: {marks or 'neither'}"
            if bad:
                status = f"DISAGREES at k={bad}"
        lines.append(
            f"parts={','.join(map(str, entry['parts']))} n={entry['n']}: "
            f"χ={rep['chi_eq']} χ=*={rep['chi_eq_star']} [{rep['case']}] "
            f"feasible k: {_ranges(feas)} ({status})"
        )
    s = result["summary"]
    lines.append(
        f"{s['spec_count']} specs, {s['disagreements']} disagreements, "
        f"{s['rows_skipped']} rows skipped, "
        f"{s['rows_budget_exceeded']} rows over budget"
    )
    lines.append(
        "case-1 readings vs oracle: "
        f"floor mismatches {s['floor_reading_mismatches']}, "
        f"ceiling mismatches {s['ceiling_reading_mismatches']}"
    )
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _ranges(ks: list[str]) -> str:
    """Compress a sorted list of integers into a-b,c spans."""
    if not ks:
        return "-"
    vals = [int(k) for k in ks]
    spans = []
    start = prev = vals[0]
    for v in vals[1:]:
        if v == prev + 1:
            prev = v
            continue
        spans.append((start, prev))
        start = prev = v
    spans.append((start, prev))
    return ",".join(f"{a}" if a == b else f"{a}-{b}" for a, b in spans)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqcolor",
        description=(
            "Equitable colorings of complete multipartite graphs and their "
            "Kronecker products with complete graphs: closed-form thresholds, "
            "witness construction, verification, and brute-force cross-checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_k=False):
        p.add_argument("--parts", type=_parse_parts, required=True,
                       help="comma-separated part sizes m_1,...,m_r")
        p.add_argument("--n", type=int, required=True, help="order of the complete factor K_n")
        if with_k:
            p.add_argument("--k", type=int, required=True, help="number of color classes")
        p.add_argument("--budget", type=int, default=_default_budget(),
                       help="search node budget (default 10^7 or EQCOLOR_BUDGET)")
        p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("compute", help="closed-form chi_= and chi_=* report")
    add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--oracle", action="store_true",
                   help="answer by exhaustive search on the explicit graph")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="emit a witness equitable k-coloring")
    add_common(p, with_k=True)
    p.add_argument("--format", choices=["dimacs", "json", "text"], default="dimacs",
                   help="dimacs: one 's v c' line per vertex (default)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a coloring file against a DIMACS graph")
    p.add_argument("--graph", required=True, help="DIMACS edge file")
    p.add_argument("--coloring", required=True, help="JSON or 's v c' coloring file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="emit a DIMACS graph for these parameters")
    add_common(p)
    p.add_argument("--multipartite", action="store_true",
                   help="emit the companion K_{m_1 n,...,m_r n} instead of the product")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("sweep", help="formula-vs-oracle agreement sweep")
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--max-part", type=int, default=2)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                   help="largest vertex count the oracle is run on")
    p.add_argument("--budget", type=int, default=_default_budget())
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OutOfScopeError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
