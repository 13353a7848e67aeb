"""Simple undirected graph value type with non-adjacent vertex contraction.

Graphs are immutable: :meth:`Graph.contract` and :meth:`Graph.delete_vertices`
return new values and leave the receiver untouched, so callers can keep the
original graph around to audit merged-vertex provenance.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Graph",
    "GraphError",
    "ContractionError",
    "VertexNotFound",
    "build_graph",
    "is_proper_coloring",
]


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class ContractionError(GraphError):
    pass


class VertexNotFound(KeyError):
    pass


class Graph:
    """Simple graph over integer vertex ids.

    Each vertex carries a provenance set: the original vertex ids that were
    merged into it.  A freshly built graph has singleton provenance.  When two
    vertices are contracted the smaller id survives.
    """

    __slots__ = ("_adj", "_prov", "_vertices")

    def __init__(
        self,
        adjacency: Mapping[int, Iterable[int]] | None = None,
        provenance: Mapping[int, Iterable[int]] | None = None,
    ):
        adjacency = adjacency or {}
        adj = {int(v): frozenset(int(w) for w in nbrs) for v, nbrs in adjacency.items()}
        for v, nbrs in adj.items():
            if v in nbrs:
                raise GraphError(f"self-loop on vertex {v}")
            for w in nbrs:
                if w not in adj:
                    raise GraphError(f"edge ({v}, {w}) leaves the vertex set")
                if v not in adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        if provenance is None:
            prov = {v: frozenset((v,)) for v in adj}
        else:
            prov = {int(v): frozenset(int(x) for x in s) for v, s in provenance.items()}
            if prov.keys() != adj.keys():
                raise GraphError("provenance keys must match the vertex set")
            seen: set[int] = set()
            for s in prov.values():
                if not s or seen & s:
                    raise GraphError("provenance sets must be nonempty and disjoint")
                seen |= s
        self._adj = adj
        self._prov = prov
        self._vertices = tuple(sorted(adj))

    @classmethod
    def _from_parts(cls, adj: dict[int, frozenset[int]], prov: dict[int, frozenset[int]]) -> Graph:
        # trusted constructor for derived graphs; invariants hold by construction
        g = cls.__new__(cls)
        g._adj = adj
        g._prov = prov
        g._vertices = tuple(sorted(adj))
        return g

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def _check(self, v: int) -> None:
        if v not in self._adj:
            raise VertexNotFound(v)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def non_adjacent_pairs(self) -> Iterator[tuple[int, int]]:
        """Non-adjacent pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        adj = self._adj
        for u, v in combinations(self._vertices, 2):
            if v not in adj[u]:
                yield u, v

    def provenance(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._prov[v]

    @property
    def provenance_map(self) -> dict[int, frozenset[int]]:
        return dict(self._prov)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def common_neighborhood(self, u: int, v: int) -> frozenset[int]:
        """Vertices adjacent to both ``u`` and ``v``.

        Defined for adjacent pairs as well; the selection rule filters those out.
        """
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError("common neighborhood needs two distinct vertices")
        return self._adj[u] & self._adj[v]

    def is_complete(self) -> bool:
        n = len(self._vertices)
        return all(len(nbrs) == n - 1 for nbrs in self._adj.values())

    def is_independent_set(self, s: Iterable[int]) -> bool:
        s = set(s)
        for v in s:
            self._check(v)
        return all(not (self._adj[v] & s) for v in s)

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    # -- derived graphs --------------------------------------------------

    def contract(self, u: int, v: int) -> Graph:
        """Fuse two non-adjacent vertices; the smaller id survives.

        The survivor is adjacent to everything either vertex was adjacent to
        and its provenance is the union of both provenance sets.
        """
        self._check(u)
        self._check(v)
        if u == v:
            raise ContractionError(f"cannot contract vertex {u} with itself")
        if v in self._adj[u]:
            raise ContractionError(f"vertices {u} and {v} are adjacent")
        keep, drop = (u, v) if u < v else (v, u)
        adj = dict(self._adj)
        prov = dict(self._prov)
        merged = adj.pop(keep) | adj.pop(drop)
        adj[keep] = merged
        for w in self._adj[drop]:
            adj[w] = (adj[w] - {drop}) | {keep}
        prov[keep] = prov.pop(keep) | prov.pop(drop)
        return Graph._from_parts(adj, prov)

    def delete_vertices(self, drop: Iterable[int]) -> Graph:
        """Induced subgraph on the vertices not in ``drop``."""
        drop = frozenset(drop)
        for v in drop:
            self._check(v)
        if not drop:
            return self
        adj = {v: nbrs - drop for v, nbrs in self._adj.items() if v not in drop}
        prov = {v: s for v, s in self._prov.items() if v not in drop}
        return Graph._from_parts(adj, prov)

    def relabeled(self) -> Graph:
        """Copy with vertices renumbered densely ``0..n-1`` in id order, fresh provenance."""
        index = {v: i for i, v in enumerate(self._vertices)}
        return Graph({index[v]: [index[w] for w in self._adj[v]] for v in self._vertices})

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._prov == other._prov

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices ``0..n-1``; repeated edges collapse to one."""
    if n < 1:
        raise GraphError(f"vertex count must be at least 1, got {n}")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop on vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph._from_parts(
        {v: frozenset(s) for v, s in adj.items()},
        {v: frozenset((v,)) for v in adj},
    )


def is_proper_coloring(g: Graph, assignment: Mapping[int, int]) -> bool:
    """True if ``assignment`` colors every vertex and no edge is monochromatic."""
    if set(assignment) != set(g.vertices):
        return False
    return all(assignment[u] != assignment[v] for u, v in g.edges())
