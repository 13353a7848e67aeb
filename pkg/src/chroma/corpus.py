"""Deterministic graph families for tests, acceptance runs and mining.

Families are small frozen dataclasses.  ``str(family)`` gives the spec string
accepted by :func:`parse_family` (and by the ``gen`` command), e.g.
``cycle:5``, ``kbipartite:3,3``, ``mycielski:cycle:5:1``, ``random:10,0.5,1``.

Random graphs use :class:`~chroma.rng.SplitMix64` seeded with ``seed``: one
64-bit draw per vertex pair ``(u, v)``, ``u < v``, in lexicographic order;
the edge is present when the draw's top 53 bits, scaled to [0, 1), are
below ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, build_graph
from .rng import MASK64, SplitMix64

__all__ = [
    "Complete",
    "Cycle",
    "Path",
    "CompleteBipartite",
    "Star",
    "Petersen",
    "Mycielski",
    "Random",
    "GraphFamily",
    "generate",
    "known_chromatic",
    "parse_family",
    "mycielskian",
]


def _positive(name: str, value: int, least: int = 1) -> None:
    if not isinstance(value, int) or value < least:
        raise GraphError(f"{name} must be an integer >= {least}, got {value!r}")


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self):
        _positive("n", self.n)

    def generate(self) -> Graph:
        return build_graph(self.n, combinations(range(self.n), 2))

    def known_chromatic(self) -> int | None:
        return self.n

    def __str__(self):
        return f"complete:{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        _positive("n", self.n, 3)

    def generate(self) -> Graph:
        return build_graph(self.n, [(i, (i + 1) % self.n) for i in range(self.n)])

    def known_chromatic(self) -> int | None:
        return 2 if self.n % 2 == 0 else 3

    def __str__(self):
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        _positive("n", self.n)

    def generate(self) -> Graph:
        return build_graph(self.n, [(i, i + 1) for i in range(self.n - 1)])

    def known_chromatic(self) -> int | None:
        return 1 if self.n == 1 else 2

    def __str__(self):
        return f"path:{self.n}"


@dataclass(frozen=True)
class CompleteBipartite:
    """Sides ``0..a-1`` and ``a..a+b-1``."""

    a: int
    b: int

    def __post_init__(self):
        _positive("a", self.a)
        _positive("b", self.b)

    def generate(self) -> Graph:
        return build_graph(
            self.a + self.b,
            [(i, self.a + j) for i in range(self.a) for j in range(self.b)],
        )

    def known_chromatic(self) -> int | None:
        return 2

    def __str__(self):
        return f"kbipartite:{self.a},{self.b}"


@dataclass(frozen=True)
class Star:
    """``n`` vertices in total: center 0 and leaves ``1..n-1``."""

    n: int

    def __post_init__(self):
        _positive("n", self.n)

    def generate(self) -> Graph:
        return build_graph(self.n, [(0, i) for i in range(1, self.n)])

    def known_chromatic(self) -> int | None:
        return 1 if self.n == 1 else 2

    def __str__(self):
        return f"star:{self.n}"


@dataclass(frozen=True)
class Petersen:
    """Outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i -- i+5``."""

    def generate(self) -> Graph:
        edges = []
        for i in range(5):
            edges.append((i, (i + 1) % 5))
            edges.append((5 + i, 5 + (i + 2) % 5))
            edges.append((i, 5 + i))
        return build_graph(10, edges)

    def known_chromatic(self) -> int | None:
        return 3

    def __str__(self):
        return "petersen"


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction on a graph with vertices ``0..n-1``.

    Vertices ``0..n-1`` keep their edges, shadow ``n+i`` is joined to every
    neighbor of ``i`` and to the apex ``2n``.
    """
    n = g.num_vertices
    if g.vertices != tuple(range(n)):
        g = g.relabeled()
    edges = list(g.edges())
    for i in range(n):
        edges.extend((w, n + i) for w in g.neighbors(i))
        edges.append((n + i, 2 * n))
    return build_graph(2 * n + 1, edges)


@dataclass(frozen=True)
class Mycielski:
    base: GraphFamily
    iterations: int = 1

    def __post_init__(self):
        _positive("iterations", self.iterations, 0)

    def generate(self) -> Graph:
        g = self.base.generate()
        for _ in range(self.iterations):
            g = mycielskian(g)
        return g

    def known_chromatic(self) -> int | None:
        k = self.base.known_chromatic()
        return None if k is None else k + self.iterations

    def __str__(self):
        return f"mycielski:{self.base}:{self.iterations}"


@dataclass(frozen=True)
class Random:
    """G(n, p) drawn from a SplitMix64 stream; see the module docstring."""

    n: int
    p: float
    seed: int

    def __post_init__(self):
        _positive("n", self.n)
        if not 0.0 <= self.p <= 1.0:
            raise GraphError(f"edge probability must lie in [0, 1], got {self.p}")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MASK64:
            raise GraphError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    def generate(self) -> Graph:
        rng = SplitMix64(self.seed)
        return build_graph(
            self.n,
            [(u, v) for u, v in combinations(range(self.n), 2) if rng.next_float() < self.p],
        )

    def known_chromatic(self) -> int | None:
        return None

    def __str__(self):
        return f"random:{self.n},{self.p!r},{self.seed}"


GraphFamily = Complete | Cycle | Path | CompleteBipartite | Star | Petersen | Mycielski | Random


def generate(family: GraphFamily) -> Graph:
    return family.generate()


def known_chromatic(family: GraphFamily) -> int | None:
    return family.known_chromatic()


_SIMPLE = {"complete": Complete, "cycle": Cycle, "path": Path, "star": Star}


def _ints(text: str, count: int, spec: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count or not all(p.strip().isdigit() and p.strip().isascii() for p in parts):
        raise GraphError(f"bad family spec {spec!r}")
    return [int(p) for p in parts]


def parse_family(spec: str) -> GraphFamily:
    """Parse a family spec such as ``cycle:5`` or ``mycielski:cycle:5:2``."""
    text = spec.strip()
    name, _, rest = text.partition(":")
    name = name.lower()
    if name in _SIMPLE:
        (n,) = _ints(rest, 1, spec)
        return _SIMPLE[name](n)
    if name == "petersen":
        if rest:
            raise GraphError(f"bad family spec {spec!r}")
        return Petersen()
    if name == "kbipartite":
        a, b = _ints(rest, 2, spec)
        return CompleteBipartite(a, b)
    if name == "mycielski":
        base, sep, iters = rest.rpartition(":")
        if not sep or not base:
            raise GraphError(f"bad family spec {spec!r}; expected mycielski:<spec>:<iterations>")
        (k,) = _ints(iters, 1, spec)
        return Mycielski(parse_family(base), k)
    if name == "random":
        parts = rest.split(",")
        if len(parts) != 3:
            raise GraphError(f"bad family spec {spec!r}; expected random:n,p,seed")
        try:
            n, p, seed = int(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise GraphError(f"bad family spec {spec!r}") from None
        return Random(n, p, seed)
    raise GraphError(f"unknown graph family {name!r}")
