"""Chromatic-number estimation by repeated non-adjacent vertex contraction.

At each step the solver picks, among all non-adjacent pairs, one whose
common neighborhood is largest, fuses the two vertices, and stops once the
graph is complete.  The size of that final clique bounds the chromatic
number from above, and the merged-vertex provenance classes give a proper
coloring with exactly that many colors.

Two interchangeable scan strategies are provided:

``naive``
    Rescans every non-adjacent pair with set intersections at each step.
``matrix``
    Keeps a dense common-neighbor count matrix ``C = A @ A`` and patches it
    with rank-one updates after every merge.  It selects exactly the same
    pairs as ``naive``, including under every tie policy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .graph import Graph, GraphError, is_proper_coloring
from .rng import MASK64, SplitMix64

__all__ = [
    "TiePolicy",
    "LEXMIN",
    "LEXMAX",
    "Selection",
    "ContractionStep",
    "Coloring",
    "SolveResult",
    "InvariantViolation",
    "select_pair",
    "run_operation1",
    "coloring_from_provenance",
    "contract_color_classes",
]

# below this many vertices the pure-Python scan beats numpy call overhead
MATRIX_THRESHOLD = 40


class InvariantViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class TiePolicy:
    """How to choose among pairs that share the maximum common-neighborhood size.

    ``lexmin`` takes the lexicographically smallest ``(u, v)``, ``lexmax`` the
    largest, and ``random`` draws uniformly (SplitMix64, modulo reduction)
    from the lexicographically sorted ties.
    """

    kind: str = "lexmin"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("lexmin", "lexmax", "random"):
            raise ValueError(f"unknown tie policy {self.kind!r}")
        if self.kind == "random":
            if self.seed is None or not 0 <= self.seed <= MASK64:
                raise ValueError("random tie policy needs an unsigned 64-bit seed")
        elif self.seed is not None:
            raise ValueError(f"{self.kind} takes no seed")

    @classmethod
    def seeded(cls, seed: int) -> TiePolicy:
        return cls("random", seed)

    @classmethod
    def parse(cls, text: str) -> TiePolicy:
        """Parse ``lexmin``, ``lexmax`` or ``random:<seed>``."""
        name, _, arg = text.strip().partition(":")
        name = name.lower()
        if name == "random":
            try:
                return cls.seeded(int(arg))
            except ValueError:
                raise ValueError(f"bad random tie policy {text!r}; expected random:<seed>") from None
        if arg:
            raise ValueError(f"tie policy {name!r} takes no argument")
        return cls(name)

    def rng(self) -> SplitMix64 | None:
        return SplitMix64(self.seed) if self.kind == "random" else None

    def __str__(self) -> str:
        return f"random:{self.seed}" if self.kind == "random" else self.kind


LEXMIN = TiePolicy("lexmin")
LEXMAX = TiePolicy("lexmax")


class Selection(NamedTuple):
    pair: tuple[int, int]
    common_size: int
    tie_count: int


@dataclass(frozen=True)
class ContractionStep:
    pair: tuple[int, int]
    common_size: int
    tie_count: int

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "common_size": self.common_size, "tie_count": self.tie_count}


@dataclass(frozen=True)
class Coloring:
    """Map original vertex id -> color in ``[0, k)``, every color used."""

    assignment: Mapping[int, int]
    k: int

    def __post_init__(self):
        used = set(self.assignment.values())
        if used != set(range(self.k)):
            raise ValueError(f"colors {sorted(used)} do not cover 0..{self.k - 1} exactly")

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> Coloring:
        """Color classes numbered by their smallest member."""
        ordered = sorted((sorted(c) for c in classes), key=lambda c: c[0])
        return cls({v: i for i, c in enumerate(ordered) for v in c}, len(ordered))

    def classes(self) -> list[frozenset[int]]:
        buckets: list[set[int]] = [set() for _ in range(self.k)]
        for v, c in self.assignment.items():
            buckets[c].add(v)
        return [frozenset(b) for b in buckets]


@dataclass(frozen=True)
class SolveResult:
    clique_order: int
    trace: list[ContractionStep]
    coloring: Coloring
    final_graph: Graph = field(repr=False)

    @property
    def steps(self) -> int:
        return len(self.trace)


def _choose(ties: list[tuple[int, int]], policy: TiePolicy, rng: SplitMix64 | None):
    if policy.kind == "lexmin":
        return ties[0]
    if policy.kind == "lexmax":
        return ties[-1]
    return ties[rng.below(len(ties))]


def select_pair(g: Graph, policy: TiePolicy = LEXMIN, rng: SplitMix64 | None = None) -> Selection | None:
    """Non-adjacent pair with the largest common neighborhood, or ``None`` if ``g`` is complete.

    For the random policy pass ``rng`` to continue an existing stream; by
    default a fresh stream is started from the policy seed.
    """
    if policy.kind == "random" and rng is None:
        rng = policy.rng()
    adj = g.adjacency()
    best = -1
    ties: list[tuple[int, int]] = []
    for u, v in g.non_adjacent_pairs():
        size = len(adj[u] & adj[v])
        if size > best:
            best = size
            ties = [(u, v)]
        elif size == best:
            ties.append((u, v))
    if not ties:
        return None
    return Selection(_choose(ties, policy, rng), best, len(ties))


def _run_naive(g: Graph, policy: TiePolicy) -> tuple[Graph, list[ContractionStep]]:
    rng = policy.rng()
    trace = []
    while (sel := select_pair(g, policy, rng)) is not None:
        trace.append(ContractionStep(*sel))
        g = g.contract(*sel.pair)
    return g, trace


def _run_matrix(g: Graph, policy: TiePolicy) -> tuple[Graph, list[ContractionStep]]:
    rng = policy.rng()
    ids = g.vertices
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        adj[pos[u], pos[v]] = adj[pos[v], pos[u]] = 1
    common = np.rint(adj.astype(np.float64) @ adj.astype(np.float64)).astype(np.int64)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    members = {i: set(g.provenance(v)) for i, v in enumerate(ids)}
    alive = np.ones(n, dtype=bool)
    trace = []
    while True:
        candidates = upper & (adj == 0) & alive[:, None] & alive[None, :]
        score = np.where(candidates, common, -1)
        best = int(score.max()) if n > 1 else -1
        if best < 0:
            break
        flat = np.flatnonzero(score.ravel() == best)
        if policy.kind == "lexmin":
            pick = flat[0]
        elif policy.kind == "lexmax":
            pick = flat[-1]
        else:
            pick = flat[rng.below(len(flat))]
        a, b = divmod(int(pick), n)
        trace.append(ContractionStep((ids[a], ids[b]), best, len(flat)))

        row_a = adj[a].copy()
        row_b = adj[b].copy()
        merged = row_a | row_b
        # b stops being a middle vertex; a's neighborhood grows
        common -= np.outer(row_b, row_b)
        common += np.outer(merged, merged) - np.outer(row_a, row_a)
        adj[a, :] = merged
        adj[:, a] = merged
        adj[b, :] = 0
        adj[:, b] = 0
        alive[b] = False
        row = merged @ adj
        common[a, :] = row
        common[:, a] = row
        common[b, :] = 0
        common[:, b] = 0
        members[a] |= members.pop(b)

    live = [i for i in range(n) if alive[i]]
    final = Graph(
        {ids[i]: [ids[j] for j in live if j != i] for i in live},
        {ids[i]: members[i] for i in live},
    )
    if not final.is_complete():
        raise InvariantViolation("matrix scan stopped on a non-complete graph")
    return final, trace


def run_operation1(g: Graph, policy: TiePolicy = LEXMIN, method: str = "auto") -> SolveResult:
    """Contract max-common-neighborhood pairs until ``g`` is complete.

    ``method`` is ``"naive"``, ``"matrix"`` or ``"auto"`` (matrix scan from
    :data:`MATRIX_THRESHOLD` vertices up).  All methods give identical results.
    """
    if g.num_vertices < 1:
        raise GraphError("cannot solve an empty graph")
    if method == "auto":
        method = "matrix" if g.num_vertices >= MATRIX_THRESHOLD else "naive"
    if method == "naive":
        final, trace = _run_naive(g, policy)
    elif method == "matrix":
        final, trace = _run_matrix(g, policy)
    else:
        raise ValueError(f"unknown method {method!r}")
    coloring = coloring_from_provenance(g, final)
    return SolveResult(final.num_vertices, trace, coloring, final)


def coloring_from_provenance(original: Graph, final_state: Graph) -> Coloring:
    """Read one color class off each vertex's provenance set.

    Raises :class:`InvariantViolation` if the classes do not form a proper
    coloring of ``original``; for a graph reached by valid contractions that
    cannot happen.
    """
    # provenance is in terms of the atoms original itself was built from
    owner = {a: f for f, atoms in final_state.provenance_map.items() for a in atoms}
    groups: dict[int, set[int]] = {}
    for v in original:
        heads = {owner.get(a) for a in original.provenance(v)}
        if len(heads) != 1 or None in heads:
            raise InvariantViolation(f"vertex {v} is split or missing in the final state")
        groups.setdefault(heads.pop(), set()).add(v)
    coloring = Coloring.from_classes(groups.values())
    if not is_proper_coloring(original, coloring.assignment):
        raise InvariantViolation("provenance classes are not a proper coloring of the original graph")
    return coloring


def contract_color_classes(g: Graph, coloring: Coloring) -> Graph:
    """Merge each color class into its smallest vertex; a proper coloring yields a clique."""
    if not is_proper_coloring(g, coloring.assignment):
        raise GraphError("coloring is not proper on this graph")
    h = g
    for cls in coloring.classes():
        first, *rest = sorted(cls)
        for v in rest:
            h = h.contract(first, v)
    return h
