"""Command-line front end.

Exit codes: 0 success, 1 operational failure (bad input, I/O, bad
parameter), 2 a proven inequality was violated.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import IO, Iterator

from . import families
from .bounds import DESCRIPTIONS, BoundReport, Status, evaluate_bounds
from .errors import AnnihilatorError, BudgetExceeded, ParseError
from .formats import read_graphs, write_edge_list, write_graph6
from .graph import Graph
from .independence import DEFAULT_BUDGET
from .invariants import InvariantReport, full_report
from .search import (
    CsvSink, Source, probe_conjecture_min_bipartite_equality, record_from_report,
    run_scan, scan_stream,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2
BUDGET_ENV = "ANNIHILATOR_BUDGET"


class _Parser(argparse.ArgumentParser):
    # usage errors are operational failures, not violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            print(f"warning: ignoring non-integer {BUDGET_ENV}={raw!r}", file=sys.stderr)
    return DEFAULT_BUDGET


@contextlib.contextmanager
def _open_in(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="ascii") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            yield fh


# ---------------------------------------------------------------- analyze

def _report_dict(g: Graph, report: InvariantReport, bounds: BoundReport | None) -> dict:
    cls = report.graph_class
    out = {
        "graph6": write_graph6(g),
        "n": report.n, "m": report.m, "alpha": report.alpha, "mu": report.mu,
        "a": report.annihilation, "gap": report.gap, "complete": report.complete,
        "class": {k.removeprefix("is_"): v for k, v in vars(cls).items()},
        "witnesses": {
            "independent_set": list(report.alpha_witness) if report.alpha_witness else None,
            "matching": [list(e) for e in report.mu_witness],
            "annihilating_set": list(report.annihilating_witness),
        },
    }
    if bounds is not None:
        out["bounds"] = [
            {"bound": r.bound_id.value, "applicable": r.applicable, "lhs": r.lhs,
             "rhs": float(r.rhs), "status": r.status.value, "proven": r.proven,
             "diagnostic": r.diagnostic.value}
            for r in bounds.rows
        ]
    return out


def _fmt_rhs(x) -> str:
    if hasattr(x, "denominator"):
        return str(x) if x.denominator != 1 else str(x.numerator)
    return f"{x:.4f}"


def _table(idx: int, g: Graph, report: InvariantReport, bounds: BoundReport | None) -> str:
    cls = report.graph_class
    flags = [k.removeprefix("is_") for k, v in vars(cls).items() if v]
    lines = [
        f"graph {idx}: {write_graph6(g)}  n={report.n} m={report.m}",
        f"  alpha={report.alpha if report.alpha is not None else '?'} mu={report.mu} "
        f"a={report.annihilation} gap={report.gap if report.gap is not None else '?'}",
        f"  class: {' '.join(flags) if flags else '-'}",
    ]
    if bounds is None:
        lines.append("  bounds: unknown (independence search exceeded its budget)")
        return "\n".join(lines)
    lines.append(f"  {'bound':<24} {'lhs':>5} {'rhs':>9}  {'status':<15} {'if-applied':<10} "
                 "proven  claim")
    for r in bounds.rows:
        would = "" if r.applicable else r.diagnostic.value
        lines.append(
            f"  {r.bound_id.value:<24} {r.lhs:>5} {_fmt_rhs(r.rhs):>9}  {r.status.value:<15} "
            f"{would:<10} {'yes' if r.proven else 'no':<6}  {DESCRIPTIONS[r.bound_id]}"
        )
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    budget = args.budget
    violated = False
    errors: list[ParseError] = []
    count = 0
    with _open_in(args.input) as fh, _open_out(args.output) as out:
        sink = CsvSink(out) if args.format == "csv" else None
        docs = []
        try:
            for idx, g in enumerate(read_graphs(fh, tolerant=args.tolerant, errors=errors), 1):
                count += 1
                try:
                    report = full_report(g, budget)
                    bounds = evaluate_bounds(report)
                except BudgetExceeded as exc:
                    report, bounds = exc.partial, None
                    print(f"warning: graph {idx}: {exc}", file=sys.stderr)
                if bounds is not None and bounds.proven_violations():
                    violated = True
                if args.format == "table":
                    out.write(_table(idx, g, report, bounds) + "\n\n")
                elif args.format == "json":
                    docs.append(_report_dict(g, report, bounds))
                elif sink is not None:
                    sink.write(record_from_report(g, report, Source.STREAM))
                else:
                    out.write((write_graph6(g) if args.format == "graph6" else write_edge_list(g))
                              + "\n")
        except (ParseError, AnnihilatorError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if args.format == "json":
            out.write(json.dumps({"schema": "annihilator.analyze/1", "graphs": docs},
                                 indent=2, sort_keys=True) + "\n")
    for err in errors:
        print(f"warning: skipped {err}", file=sys.stderr)
    if count == 0:
        print("error: no graphs in input", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_VIOLATION if violated else EXIT_OK


# ---------------------------------------------------------------- generate / verify

def cmd_generate(args) -> int:
    try:
        fid = families.resolve_family(args.family)
        param = args.param
        if fid in families.PARAMETRIC and param is None:
            param = families.MIN_PARAMETER[fid]
        spec = families.family_spec(fid, param)
        g = families.build(fid, spec.parameter)
    except AnnihilatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.self_check:
        problems = families.self_check(spec, full_report(g, args.budget))
        if problems:
            for p in problems:
                print(f"self-check failed: {p}", file=sys.stderr)
            return EXIT_VIOLATION
        label = fid.value if spec.parameter is None else f"{fid.value}({spec.parameter})"
        print(f"self-check passed: {label} n={spec.n} m={spec.m} "
              f"alpha={spec.alpha} mu={spec.mu} a={spec.a}", file=sys.stderr)
    text = write_edge_list(g) if args.format == "edgelist" else write_graph6(g) + "\n"
    with _open_out(args.output) as out:
        out.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    lines = []
    for fid, param in families.default_fixtures():
        spec = families.family_spec(fid, param)
        g = families.build(fid, param)
        report = full_report(g, args.budget)
        problems = families.self_check(spec, report)
        bounds = evaluate_bounds(report)
        bad = [r.bound_id.value for r in bounds.proven_violations()]
        if fid is families.FamilyId.BIPARTITE_COUNTEREXAMPLE_32:
            # the point of this graph: the tree inequality fails off trees
            if bounds.row("TREE_HALF_MU").diagnostic is not Status.VIOLATED:
                problems.append("tree inequality should fail on this graph")
        ok = not problems and not bad
        failed += not ok
        label = f"{fid.value}({param})" if param is not None else fid.value
        detail = "; ".join(problems + [f"violates {b}" for b in bad])
        lines.append(f"{'PASS' if ok else 'FAIL'}  {label:<32} n={report.n} m={report.m} "
                     f"alpha={report.alpha} mu={report.mu} a={report.annihilation}"
                     + (f"  {detail}" if detail else ""))
    with _open_out(args.output) as out:
        out.write("\n".join(lines) + "\n")
    return EXIT_VIOLATION if failed else EXIT_OK


# ---------------------------------------------------------------- search / probe

def _parse_range(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _write_summary(args, text: str) -> None:
    if args.summary:
        with open(args.summary, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_search(args) -> int:
    errors: list[ParseError] = []
    try:
        with contextlib.ExitStack() as stack:
            csv_out = stack.enter_context(_open_out(args.output)) if args.output else None
            if args.trees:
                from .treescan import scan_trees

                summary = scan_trees(_parse_range(args.trees), count=args.sample,
                                     seed=args.seed, workers=args.workers, csv_out=csv_out)
            else:
                fh = stack.enter_context(_open_in(None if args.stdin else args.input))
                records = scan_stream(fh, args.filter, args.budget, args.tolerant,
                                      args.workers, errors)
                summary = run_scan(records, csv_out)
    except (AnnihilatorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for err in errors:
        print(f"warning: skipped {err}", file=sys.stderr)
    _write_summary(args, summary.to_json(include_runtime=args.timing))
    print(f"{summary.total} graphs in {summary.runtime:.2f}s, "
          f"{summary.proven_violations} proven-bound violations", file=sys.stderr)
    bad = summary.proven_violations or summary.check_failures
    return EXIT_VIOLATION if bad else EXIT_OK


def _family_lines() -> list[str]:
    return [write_graph6(families.build(f, p)) + "\n" for f, p in families.default_fixtures()]


def cmd_probe(args) -> int:
    try:
        with contextlib.ExitStack() as stack:
            csv_out = stack.enter_context(_open_out(args.output)) if args.output else None
            fh = stack.enter_context(_open_in(None if args.stdin else args.input))
            lines = list(fh)
            if args.include_families:
                lines += _family_lines()
            result = probe_conjecture_min_bipartite_equality(
                args.max_n, lines, args.budget, args.tolerant, args.workers, csv_out)
    except (AnnihilatorError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _write_summary(args, result.to_json(include_runtime=args.timing))
    s = result.summary
    return EXIT_VIOLATION if (s.proven_violations or s.check_failures) else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="annihilator", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, budget=True):
        sp.add_argument("--output", "-o", help="output path (default: stdout)")
        if budget:
            sp.add_argument("--budget", type=int, default=default_budget(),
                            help=f"independence search node limit (env {BUDGET_ENV})")

    a = sub.add_parser("analyze", help="invariants and bound table for each input graph")
    a.add_argument("--input", "-i", help="graph6 stream or edge-list file (default: stdin)")
    a.add_argument("--format", choices=["table", "json", "csv", "graph6", "edgelist"],
                   default="table")
    a.add_argument("--tolerant", action="store_true", help="skip unparsable graph6 lines")
    common(a)
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="write a family graph")
    g.add_argument("family", help="star, tree-mu3, tree-mu5, spider, bipartite-p, "
                                  "bipartite-16, bipartite-32, ke, ke-12")
    g.add_argument("param", nargs="?", type=int)
    g.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    g.add_argument("--self-check", action="store_true",
                   help="compare invariants with the closed forms before writing")
    common(g)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check every fixture graph against its published values")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="scan trees or a graph6 stream")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--trees", help="tree size n or range lo-hi")
    src.add_argument("--input", "-i", help="graph6 file")
    src.add_argument("--stdin", action="store_true", help="read graph6 from stdin")
    s.add_argument("--sample", type=int, help="random trees per n instead of all of them")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--filter", help="comma list, e.g. bipartite,connected or not-tree")
    s.add_argument("--tolerant", action="store_true")
    s.add_argument("--summary", help="JSON summary path (default: stdout)")
    s.add_argument("--timing", action="store_true", help="include runtime in the summary")
    common(s)
    s.set_defaults(func=cmd_search)

    q = sub.add_parser("probe", help="smallest bipartite graph attaining the sqrt bound")
    qsrc = q.add_mutually_exclusive_group(required=True)
    qsrc.add_argument("--input", "-i", help="graph6 file of bipartite graphs")
    qsrc.add_argument("--stdin", action="store_true")
    q.add_argument("--max-n", type=int, required=True,
                   help="largest n the stream is assumed to cover exhaustively")
    q.add_argument("--include-families", action="store_true",
                   help="append the built-in family fixtures to the stream")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--tolerant", action="store_true")
    q.add_argument("--summary", help="JSON result path (default: stdout)")
    q.add_argument("--timing", action="store_true")
    common(q)
    q.set_defaults(func=cmd_probe)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
