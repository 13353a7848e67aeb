"""Exact colorability, chromatic number, maximum clique and partition enumeration.

Every search runs over int bitmasks indexed by vertex position (ascending id
order) and counts search nodes against a :class:`Budget`.  Running out of
nodes raises :class:`BudgetExhausted`; it is an expected outcome on hard
instances, not a crash.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, GraphError
from .solver import LEXMIN, Coloring, select_pair

__all__ = [
    "Budget",
    "BudgetExhausted",
    "CliqueResult",
    "ChromaticPartition",
    "PartitionEnumeration",
    "Condition1Report",
    "NoNonAdjacentPair",
    "is_k_colorable",
    "exact_chromatic_number",
    "optimal_coloring",
    "max_clique",
    "enumerate_chromatic_partitions",
    "check_condition1",
]


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**7
    max_partitions: int = 10**4

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_partitions < 1:
            raise ValueError("budget limits must be positive")


class BudgetExhausted(Exception):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class NoNonAdjacentPair(GraphError):
    pass


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExhausted(self.nodes - 1)


def _bitmasks(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    ids = g.vertices
    pos = {v: i for i, v in enumerate(ids)}
    nbr = [0] * len(ids)
    for i, v in enumerate(ids):
        for w in g.neighbors(v):
            nbr[i] |= 1 << pos[w]
    return ids, nbr


def _ensure_depth(n: int) -> None:
    if sys.getrecursionlimit() < n + 500:
        sys.setrecursionlimit(n + 500)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- k-colorability --------------------------------------------------------


def _dsatur_pick(nbr: list[int], classes: list[int], uncolored: int) -> int:
    best_v, best_key = -1, None
    for v in _bits(uncolored):
        nv = nbr[v]
        sat = sum(1 for c in classes if c & nv)
        key = (sat, (nv & uncolored).bit_count())
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def _search_k(nbr: list[int], k: int, counter: _Counter) -> list[int] | None:
    """Backtracking DSATUR; returns the color classes as bitmasks, or None."""
    n = len(nbr)
    classes: list[int] = []

    def extend(uncolored: int) -> bool:
        if not uncolored:
            return True
        v = _dsatur_pick(nbr, classes, uncolored)
        bit = 1 << v
        rest = uncolored ^ bit
        for c in range(len(classes)):
            if not classes[c] & nbr[v]:
                counter.tick()
                classes[c] |= bit
                if extend(rest):
                    return True
                classes[c] ^= bit
        # only ever open the next unused color: colors are interchangeable
        if len(classes) < k:
            counter.tick()
            classes.append(bit)
            if extend(rest):
                return True
            classes.pop()
        return False

    _ensure_depth(n)
    return classes if extend((1 << n) - 1) else None


def _greedy_dsatur(nbr: list[int]) -> list[int]:
    classes: list[int] = []
    uncolored = (1 << len(nbr)) - 1
    while uncolored:
        v = _dsatur_pick(nbr, classes, uncolored)
        for c in range(len(classes)):
            if not classes[c] & nbr[v]:
                classes[c] |= 1 << v
                break
        else:
            classes.append(1 << v)
        uncolored ^= 1 << v
    return classes


def _to_coloring(ids, classes: list[int]) -> Coloring:
    return Coloring.from_classes([ids[i] for i in _bits(c)] for c in classes)


def is_k_colorable(g: Graph, k: int, budget: Budget = Budget()) -> Coloring | None:
    """A proper coloring with at most ``k`` colors, or ``None`` if none exists.

    Raises :class:`BudgetExhausted` if the search is cut off first.
    """
    if k < 1:
        raise ValueError("k must be positive")
    ids, nbr = _bitmasks(g)
    if not ids:
        return Coloring({}, 0)
    classes = _search_k(nbr, k, _Counter(budget.max_nodes))
    return None if classes is None else _to_coloring(ids, classes)


# -- maximum clique --------------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    vertices: frozenset[int]
    exact: bool

    def __len__(self) -> int:
        return len(self.vertices)


def _clique_search(nbr: list[int], counter: _Counter, best: list[int]) -> None:
    """Branch and bound with greedy-coloring bounds; improves ``best`` in place."""

    def color_order(cand: int) -> list[tuple[int, int]]:
        order = []
        color = 0
        while cand:
            color += 1
            avail = cand
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~nbr[v] & ~low
                cand ^= low
                order.append((v, color))
        return order

    def expand(clique: list[int], cand: int) -> None:
        for v, bound in reversed(color_order(cand)):
            if len(clique) + bound <= len(best):
                return
            counter.tick()
            clique.append(v)
            nxt = cand & nbr[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best[:] = clique
            clique.pop()
            cand &= ~(1 << v)

    _ensure_depth(len(nbr))
    expand([], (1 << len(nbr)) - 1)


def max_clique(g: Graph, budget: Budget = Budget()) -> CliqueResult:
    """A maximum clique; on budget exhaustion the best clique found, flagged inexact."""
    ids, nbr = _bitmasks(g)
    best: list[int] = []
    try:
        _clique_search(nbr, _Counter(budget.max_nodes), best)
    except BudgetExhausted:
        return CliqueResult(frozenset(ids[i] for i in best), False)
    return CliqueResult(frozenset(ids[i] for i in best), True)


# -- chromatic number --------------------------------------------------------


def _chromatic(nbr: list[int], counter: _Counter) -> tuple[int, list[int]]:
    if not nbr:
        return 0, []
    clique: list[int] = []
    _clique_search(nbr, counter, clique)
    upper = _greedy_dsatur(nbr)
    for k in range(len(clique), len(upper)):
        classes = _search_k(nbr, k, counter)
        if classes is not None:
            return k, classes
    return len(upper), upper


def optimal_coloring(g: Graph, budget: Budget = Budget()) -> Coloring:
    """A coloring with exactly chi(g) colors.

    The search starts from the maximum-clique lower bound and stops at the
    greedy DSATUR upper bound.  Raises :class:`BudgetExhausted`.
    """
    ids, nbr = _bitmasks(g)
    _, classes = _chromatic(nbr, _Counter(budget.max_nodes))
    return _to_coloring(ids, classes)


def exact_chromatic_number(g: Graph, budget: Budget = Budget()) -> int:
    _, nbr = _bitmasks(g)
    chi, _ = _chromatic(nbr, _Counter(budget.max_nodes))
    return chi


# -- chromatic partitions -----------------------------------------------------

ChromaticPartition = tuple[frozenset[int], ...]
"""Color classes sorted by smallest member; the canonical form up to relabeling."""


@dataclass(frozen=True)
class PartitionEnumeration:
    chi: int
    partitions: list[ChromaticPartition]
    truncated: bool


def enumerate_chromatic_partitions(g: Graph, budget: Budget = Budget()) -> PartitionEnumeration:
    """All partitions of the vertex set into exactly chi(g) independent sets.

    Vertices are placed in id order, each into an earlier class or the next
    new one, so every unlabeled partition is produced once and already in
    canonical order.  Stops after ``budget.max_partitions`` results with
    ``truncated`` set.
    """
    ids, nbr = _bitmasks(g)
    counter = _Counter(budget.max_nodes)
    chi, _ = _chromatic(nbr, counter)
    n = len(ids)
    out: list[ChromaticPartition] = []
    classes: list[int] = []

    class _Full(Exception):
        pass

    def place(i: int) -> None:
        if len(classes) + (n - i) < chi:
            return
        if i == n:
            if len(out) >= budget.max_partitions:
                raise _Full
            out.append(tuple(frozenset(ids[j] for j in _bits(c)) for c in classes))
            return
        bit = 1 << i
        for c in range(len(classes)):
            if not classes[c] & nbr[i]:
                counter.tick()
                classes[c] |= bit
                place(i + 1)
                classes[c] ^= bit
        if len(classes) < chi:
            counter.tick()
            classes.append(bit)
            place(i + 1)
            classes.pop()

    _ensure_depth(n)
    truncated = False
    try:
        place(0)
    except _Full:
        truncated = True
    return PartitionEnumeration(chi, out, truncated)


# -- Condition 1 ------------------------------------------------------------


@dataclass(frozen=True)
class Condition1Report:
    """Outcome of the Condition-1 check for the lexmin argmax pair ``(u0, v0)``.

    A partition satisfies the condition when every class with no neighbor of
    ``u0`` also has no neighbor of ``v0``.  Both quantifier readings over the
    optimal partitions of ``G - {u0, v0}`` are reported.
    """

    pair: tuple[int, int]
    common_size: int
    chi_reduced: int
    holds_for_some_partition: bool
    holds_for_all_partitions: bool
    partitions_checked: int
    violating_partitions: int
    truncated: bool
    witness_partition: ChromaticPartition | None

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "common_size": self.common_size,
            "chi_reduced": self.chi_reduced,
            "holds_for_some_partition": self.holds_for_some_partition,
            "holds_for_all_partitions": self.holds_for_all_partitions,
            "partitions_checked": self.partitions_checked,
            "violating_partitions": self.violating_partitions,
            "truncated": self.truncated,
            "witness_partition": (
                None if self.witness_partition is None
                else [sorted(c) for c in self.witness_partition]
            ),
        }


def _condition1_holds(partition: ChromaticPartition, nu: frozenset[int], nv: frozenset[int]) -> bool:
    return all(not (cls & nv) for cls in partition if not (cls & nu))


def check_condition1(g: Graph, budget: Budget = Budget()) -> Condition1Report:
    if g.num_vertices < 3:
        raise GraphError("Condition 1 needs at least 3 vertices")
    sel = select_pair(g, LEXMIN)
    if sel is None:
        raise NoNonAdjacentPair("graph is complete; no non-adjacent pair to test")
    u0, v0 = sel.pair
    enum = enumerate_chromatic_partitions(g.delete_vertices({u0, v0}), budget)
    nu, nv = g.neighbors(u0), g.neighbors(v0)
    verdicts = [_condition1_holds(p, nu, nv) for p in enum.partitions]
    witness = next((p for p, ok in zip(enum.partitions, verdicts) if not ok), None)
    return Condition1Report(
        pair=(u0, v0),
        common_size=sel.common_size,
        chi_reduced=enum.chi,
        holds_for_some_partition=any(verdicts),
        holds_for_all_partitions=all(verdicts),
        partitions_checked=len(verdicts),
        violating_partitions=verdicts.count(False),
        truncated=enum.truncated,
        witness_partition=witness,
    )
