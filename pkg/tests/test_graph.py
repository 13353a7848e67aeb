import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chroma import ContractionError, Graph, GraphError, VertexNotFound, build_graph, is_proper_coloring
from chroma.corpus import Complete, Cycle, Path, Star

from bruteforce import independent
from strategies import graphs

P4 = Path(4).generate()
C4 = Cycle(4).generate()
C5 = Cycle(5).generate()
K4_MINUS = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.vertices == (0, 1, 2)
    assert g.edges() == [(0, 1), (1, 2)]


def test_build_collapses_duplicates():
    g = build_graph(4, [(0, 1), (0, 1), (1, 0)])
    assert g.num_edges == 1


@pytest.mark.parametrize("n, edges", [(2, [(0, 0)]), (3, [(0, 3)]), (3, [(-1, 2)]), (0, [])])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_constructor_checks_symmetry():
    with pytest.raises(GraphError):
        Graph({0: [1], 1: []})


@pytest.mark.parametrize(
    "g, u, v, expected",
    [
        (P4, 0, 2, {1}),
        (K4_MINUS, 0, 1, {2, 3}),
        (Star(4).generate(), 1, 2, {0}),
    ],
)
def test_common_neighborhood(g, u, v, expected):
    assert g.common_neighborhood(u, v) == expected


def test_common_neighborhood_missing_vertex():
    with pytest.raises(VertexNotFound):
        P4.common_neighborhood(0, 9)


def test_contract_p3():
    h = Path(3).generate().contract(0, 2)
    assert h.vertices == (0, 1)
    assert h.edges() == [(0, 1)]
    assert h.provenance(0) == {0, 2}
    assert h.provenance(1) == {1}


def test_contract_c4():
    h = C4.contract(0, 2)
    assert h.num_vertices == 3
    assert h.neighbors(0) == {1, 3}
    assert not h.has_edge(1, 3)


def test_contract_c5():
    h = C5.contract(0, 2)
    assert h.num_vertices == 4
    assert h.neighbors(0) == {1, 3, 4}
    assert h.has_edge(3, 4)
    assert not h.has_edge(1, 3)
    assert not h.has_edge(1, 4)


def test_contract_leaves_input_untouched():
    before = C5.edges()
    C5.contract(0, 2)
    assert C5.edges() == before
    assert C5.provenance(0) == {0}


def test_contract_adjacent_rejected():
    with pytest.raises(ContractionError):
        C5.contract(0, 1)
    with pytest.raises(ContractionError):
        C5.contract(3, 3)


def test_is_complete():
    assert Complete(4).generate().is_complete()
    assert not K4_MINUS.is_complete()
    assert build_graph(1, []).is_complete()
    assert Graph().is_complete()


def test_delete_vertices():
    h = C5.delete_vertices({0, 2})
    assert h.vertices == (1, 3, 4)
    assert h.edges() == [(3, 4)]
    assert h.provenance_map == {1: {1}, 3: {3}, 4: {4}}
    assert C5.delete_vertices(set()) == C5
    empty = Complete(3).generate().delete_vertices({0, 1, 2})
    assert empty.num_vertices == 0
    with pytest.raises(VertexNotFound):
        C5.delete_vertices({7})


def test_is_independent_set():
    assert C5.is_independent_set({0, 2})
    assert not C5.is_independent_set({0, 1})
    assert C5.is_independent_set(set())
    with pytest.raises(VertexNotFound):
        C5.is_independent_set({10})


def test_is_proper_coloring():
    assert is_proper_coloring(C4, {0: 0, 1: 1, 2: 0, 3: 1})
    assert not is_proper_coloring(C4, {0: 0, 1: 0, 2: 1, 3: 1})
    assert not is_proper_coloring(C4, {0: 0, 1: 1})


def _check_invariants(g: Graph, n_orig: int):
    for v in g:
        assert v not in g.neighbors(v)
        for w in g.neighbors(v):
            assert v in g.neighbors(w)
    classes = list(g.provenance_map.values())
    union = set().union(*classes) if classes else set()
    assert sum(len(c) for c in classes) == len(union)
    assert union == set(range(n_orig))


@given(graphs(), st.randoms(use_true_random=False))
def test_random_contraction_sequences_keep_invariants(g, rnd):
    adj = {v: set(g.neighbors(v)) for v in g}
    h = g
    while True:
        pairs = list(h.non_adjacent_pairs())
        if not pairs:
            break
        u, v = rnd.choice(pairs)
        if rnd.random() < 0.5:
            u, v = v, u
        nxt = h.contract(u, v)
        assert nxt.num_vertices == h.num_vertices - 1
        assert nxt.num_edges <= h.num_edges
        assert nxt == h.contract(v, u)
        h = nxt
        _check_invariants(h, g.num_vertices)
        for cls in h.provenance_map.values():
            assert independent(adj, cls)
    assert h.is_complete()


@given(graphs(min_n=2))
def test_common_neighborhood_symmetric(g):
    for u, v in zip(g.vertices, g.vertices[1:]):
        assert g.common_neighborhood(u, v) == g.common_neighborhood(v, u)


def test_brute_force_independence_many_graphs():
    rnd = random.Random(11)
    for _ in range(200):
        n = rnd.randint(1, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.4]
        g = build_graph(n, edges)
        adj = {v: set(g.neighbors(v)) for v in g}
        h = g
        while (pairs := list(h.non_adjacent_pairs())):
            h = h.contract(*rnd.choice(pairs))
        for cls in h.provenance_map.values():
            assert independent(adj, cls)
