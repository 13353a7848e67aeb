"""Command-line interface.

Exit codes: 0 ok, 1 usage error, 2 parse error, 3 oracle budget exhausted,
4 heuristic/exact disagreement under ``--strict``, 5 soundness violation
(heuristic below the exact chromatic number; always a bug).

Reports go to stdout as JSON, diagnostics to stderr.  ``CHROMA_LOG`` sets
the log level (``debug``, ``info``, ``warning``, ``error``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from .corpus import parse_family
from .fileio import ParseError, RunReport, parse_dimacs, parse_edge_list, write_dimacs, write_edge_list, write_report
from .graph import Graph, GraphError
from .mine import MineConfig, SoundnessViolation, mine
from .oracle import Budget, BudgetExhausted, NoNonAdjacentPair, check_condition1, exact_chromatic_number
from .solver import TiePolicy, run_operation1

log = logging.getLogger("chroma")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_EXHAUSTED = 3
EXIT_STRICT = 4
EXIT_SOUNDNESS = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for parse errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ms(start: float) -> int:
    return round((time.perf_counter() - start) * 1000)


def _policy(text: str) -> TiePolicy:
    try:
        return TiePolicy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, max_partitions=args.max_partitions)


def load_graph(source: str, fmt: str | None = None) -> Graph:
    """Read ``source`` as a graph file if it exists, otherwise as a family spec."""
    path = Path(source)
    if path.is_file():
        if fmt is None:
            fmt = "edgelist" if path.suffix in (".txt", ".edges", ".el") else "dimacs"
        text = path.read_bytes().decode("utf-8", errors="replace")
        return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    try:
        return parse_family(source).generate()
    except GraphError as exc:
        raise UsageError(f"{source!r} is neither a readable file nor a valid family spec ({exc})") from None


def _print_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _heuristic(g: Graph, args, report: RunReport):
    start = time.perf_counter()
    result = run_operation1(g, args.policy)
    report.wall_times_ms["heuristic"] = _ms(start)
    report.tie_policy = str(args.policy)
    report.heuristic_clique_order = result.clique_order
    report.heuristic_steps = result.steps
    if args.trace:
        report.trace = [step.to_dict() for step in result.trace]
    return result


def _exact(g: Graph, args, report: RunReport) -> bool:
    start = time.perf_counter()
    try:
        report.exact_chi = exact_chromatic_number(g, _budget(args))
        report.exact_status = "exact"
    except BudgetExhausted as exc:
        log.warning("%s", exc)
        report.exact_status = "exhausted"
    report.wall_times_ms["exact"] = _ms(start)
    return report.exact_chi is not None


def _load(args) -> tuple[Graph, RunReport]:
    start = time.perf_counter()
    g = load_graph(args.input, args.format)
    report = RunReport(args.input, g.num_vertices, g.num_edges)
    report.wall_times_ms["load"] = _ms(start)
    return g, report


def cmd_solve(args) -> int:
    g, report = _load(args)
    if not g.is_connected():
        log.warning("input graph is disconnected; contraction will merge across components")
    result = _heuristic(g, args, report)
    sys.stdout.write(write_report(report))
    if args.coloring:
        for v in sorted(result.coloring.assignment):
            sys.stdout.write(f"{v} {result.coloring.assignment[v]}\n")
    return EXIT_OK


def cmd_exact(args) -> int:
    g, report = _load(args)
    ok = _exact(g, args, report)
    sys.stdout.write(write_report(report))
    return EXIT_OK if ok else EXIT_EXHAUSTED


def cmd_compare(args) -> int:
    g, report = _load(args)
    _heuristic(g, args, report)
    ok = _exact(g, args, report)
    sys.stdout.write(write_report(report))
    if not ok:
        return EXIT_EXHAUSTED
    if report.heuristic_clique_order < report.exact_chi:
        log.error("soundness violation: heuristic %d < exact %d", report.heuristic_clique_order, report.exact_chi)
        return EXIT_SOUNDNESS
    if args.strict and not report.agreement:
        return EXIT_STRICT
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        family = parse_family(args.family)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    g = family.generate()
    text = write_dimacs(g) if args.format in (None, "dimacs") else write_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check_condition1(args) -> int:
    g, _ = _load(args)
    try:
        report = check_condition1(g, _budget(args))
    except BudgetExhausted as exc:
        log.error("%s", exc)
        _print_json({"input_name": args.input, "status": "exhausted"})
        return EXIT_EXHAUSTED
    except (NoNonAdjacentPair, GraphError) as exc:
        raise UsageError(str(exc)) from None
    _print_json({"input_name": args.input, "status": "ok", **report.to_dict()})
    return EXIT_OK


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad probability list {text!r}") from None


def cmd_mine(args) -> int:
    policies = tuple(_policy(p) for p in args.policies.split(",")) if args.policies else ()
    try:
        cfg = MineConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            p_list=args.p,
            count=args.count,
            seed=args.seed,
            policies=policies,
            out_dir=Path(args.out) if args.out else None,
            budget=Budget(max_nodes=args.max_nodes, max_partitions=args.max_partitions),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        summary = mine(cfg, workers=args.workers)
    except SoundnessViolation as exc:
        log.error("soundness violation: %s", exc)
        return EXIT_SOUNDNESS
    if cfg.out_dir is not None:
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
        (cfg.out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    _print_json(summary)
    return EXIT_EXHAUSTED if summary["exhausted"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chroma", description="Chromatic number by non-adjacent vertex contraction.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p):
        p.add_argument("input", help="graph file (DIMACS or edge list) or family spec, e.g. cycle:5")
        p.add_argument("--format", choices=["dimacs", "edgelist"], help="input format (default: by extension)")

    def budget_flags(p):
        p.add_argument("--max-nodes", type=_positive_int, default=Budget.max_nodes)
        p.add_argument("--max-partitions", type=_positive_int, default=Budget.max_partitions)

    def heuristic_flags(p):
        p.add_argument("--policy", type=_policy, default=TiePolicy(), help="lexmin | lexmax | random:<seed>")
        p.add_argument("--trace", action="store_true", help="include the contraction trace")

    p = sub.add_parser("solve", help="run the contraction heuristic")
    graph_input(p)
    heuristic_flags(p)
    p.add_argument("--coloring", action="store_true", help="after the report, print '<vertex> <color>' lines")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="exact chromatic number")
    graph_input(p)
    budget_flags(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("compare", help="heuristic vs. exact")
    graph_input(p)
    heuristic_flags(p)
    budget_flags(p)
    p.add_argument("--strict", action="store_true", help="exit 4 when the two disagree")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("family", help="complete:n | cycle:n | path:n | kbipartite:a,b | star:n | petersen | "
                                  "mycielski:<spec>:iters | random:n,p,seed")
    p.add_argument("output", nargs="?", help="output path (default: stdout)")
    p.add_argument("--format", choices=["dimacs", "edgelist"], default="dimacs")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check-condition1", help="test Condition 1 on the argmax pair")
    graph_input(p)
    budget_flags(p)
    p.set_defaults(func=cmd_check_condition1)

    p = sub.add_parser("mine", help="search random graphs for heuristic/exact disagreements")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--p", type=_float_list, default=(0.3, 0.5))
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policies", help="comma-separated tie policies (default: lexmin,lexmax,random:<seed>)")
    p.add_argument("--out", help="directory for counterexample artifacts and summary.json")
    p.add_argument("--workers", type=_positive_int, default=1)
    budget_flags(p)
    p.set_defaults(func=cmd_mine)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("CHROMA_LOG", "warning").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    logging.captureWarnings(True)


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        log.error("parse error in %s: %s", getattr(args, "input", "?"), exc)
        return EXIT_PARSE
    except (UsageError, argparse.ArgumentTypeError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
