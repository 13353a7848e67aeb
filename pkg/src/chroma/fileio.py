"""DIMACS ``.col`` and edge-list parsing/writing, and the JSON run report.

DIMACS files are 1-based; everything inside the package, including reports
and logs, uses 0-based ids.  Conversion happens only here.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field

from .graph import Graph, build_graph

__all__ = [
    "ParseError",
    "DimacsWarning",
    "MAX_VERTICES",
    "parse_dimacs",
    "write_dimacs",
    "parse_edge_list",
    "write_edge_list",
    "RunReport",
    "write_report",
    "parse_report",
    "REPORT_VERSION",
]

# refuse headers that would allocate absurd graphs
MAX_VERTICES = 1_000_000
REPORT_VERSION = 1

_UINT = re.compile(r"[0-9]+")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DimacsWarning(UserWarning):
    pass


def _uint(token: str, lineno: int) -> int:
    if not _UINT.fullmatch(token):
        raise ParseError(lineno, f"expected a non-negative integer, got {token!r}")
    return int(token)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS edge-format graph (``p edge n m`` then ``e u v`` lines).

    ``p col`` headers are accepted as well.  A header edge count that
    disagrees with the number of distinct edges, or repeated ``e`` lines,
    only produce a :class:`DimacsWarning`.
    """
    n = None
    declared_m = 0
    header_line = 0
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, f"duplicate problem line (first on line {header_line})")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            n = _uint(tokens[2], lineno)
            declared_m = _uint(tokens[3], lineno)
            if not 1 <= n <= MAX_VERTICES:
                raise ParseError(lineno, f"vertex count {n} outside 1..{MAX_VERTICES}")
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge line before the problem line")
            if len(tokens) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _uint(tokens[1], lineno), _uint(tokens[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(lineno, f"endpoint {x} outside 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop on vertex {u}")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                duplicates += 1
            edges.add(key)
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing problem line 'p edge <n> <m>'")
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) collapsed", DimacsWarning, stacklevel=2)
    if declared_m != len(edges):
        warnings.warn(
            f"header declares {declared_m} edges, found {len(edges)} distinct",
            DimacsWarning,
            stacklevel=2,
        )
    return build_graph(n, sorted(edges))


def write_dimacs(g: Graph) -> str:
    """DIMACS text with vertices renumbered ``1..n`` in id order; provenance is dropped."""
    index = {v: i + 1 for i, v in enumerate(g.vertices)}
    edges = sorted((index[u], index[v]) for u, v in g.edges())
    lines = [f"p edge {g.num_vertices} {len(edges)}"]
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with 0-based ids; ``n`` is the largest id plus one."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, "expected '<u> <v>'")
        if any(t.startswith("-") and _UINT.fullmatch(t[1:]) for t in tokens):
            raise ParseError(lineno, "negative vertex id")
        u, v = _uint(tokens[0], lineno), _uint(tokens[1], lineno)
        if u == v:
            raise ParseError(lineno, f"self-loop on vertex {u}")
        if max(u, v) >= MAX_VERTICES:
            raise ParseError(lineno, f"vertex id {max(u, v)} exceeds {MAX_VERTICES - 1}")
        top = max(top, u, v)
        edges.append((u, v))
    if top < 0:
        raise ParseError(0, "no edges; cannot infer the vertex count")
    return build_graph(top + 1, edges)


def write_edge_list(g: Graph) -> str:
    index = {v: i for i, v in enumerate(g.vertices)}
    return "".join(f"{index[u]} {index[v]}\n" for u, v in g.edges())


# -- reports ---------------------------------------------------------------

EXACT_STATUSES = ("exact", "exhausted", "skipped")


@dataclass
class RunReport:
    """Result of one solve/exact/compare run.

    ``agreement`` is derived: present only when both the heuristic and the
    exact value are.
    """

    input_name: str
    n: int
    m: int
    tie_policy: str | None = None
    heuristic_clique_order: int | None = None
    heuristic_steps: int | None = None
    exact_chi: int | None = None
    exact_status: str = "skipped"
    trace: list[dict] | None = None
    wall_times_ms: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.exact_status not in EXACT_STATUSES:
            raise ValueError(f"exact_status must be one of {EXACT_STATUSES}")
        if (self.exact_chi is not None) != (self.exact_status == "exact"):
            raise ValueError("exact_chi is present exactly when exact_status is 'exact'")

    @property
    def agreement(self) -> bool | None:
        if self.heuristic_clique_order is None or self.exact_chi is None:
            return None
        return self.heuristic_clique_order == self.exact_chi

    @property
    def trace_included(self) -> bool:
        return self.trace is not None

    def to_dict(self) -> dict:
        out: dict = {"report_version": REPORT_VERSION, "input_name": self.input_name, "n": self.n, "m": self.m}
        if self.heuristic_clique_order is not None:
            out["tie_policy"] = self.tie_policy
            out["heuristic_clique_order"] = self.heuristic_clique_order
            out["heuristic_steps"] = self.heuristic_steps
        out["exact_status"] = self.exact_status
        if self.exact_chi is not None:
            out["exact_chi"] = self.exact_chi
        if self.agreement is not None:
            out["agreement"] = self.agreement
        out["trace_included"] = self.trace_included
        if self.trace is not None:
            out["trace"] = self.trace
        out["wall_times_ms"] = dict(self.wall_times_ms)
        return out


def write_report(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def parse_report(text: str) -> RunReport:
    """Inverse of :func:`write_report`; also checks the stored agreement flag."""
    data = json.loads(text)
    if data.get("report_version") != REPORT_VERSION:
        raise ValueError(f"unsupported report version {data.get('report_version')!r}")
    report = RunReport(
        input_name=data["input_name"],
        n=data["n"],
        m=data["m"],
        tie_policy=data.get("tie_policy"),
        heuristic_clique_order=data.get("heuristic_clique_order"),
        heuristic_steps=data.get("heuristic_steps"),
        exact_chi=data.get("exact_chi"),
        exact_status=data["exact_status"],
        trace=data.get("trace"),
        wall_times_ms=data.get("wall_times_ms", {}),
    )
    if report.agreement != data.get("agreement"):
        raise ValueError("stored agreement flag contradicts the reported values")
    return report
