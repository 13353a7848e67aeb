import random

import pytest
from hypothesis import given

from chroma import (
    Budget,
    BudgetExhausted,
    GraphError,
    build_graph,
    check_condition1,
    enumerate_chromatic_partitions,
    exact_chromatic_number,
    is_k_colorable,
    is_proper_coloring,
    max_clique,
    optimal_coloring,
)
from chroma.corpus import Complete, Cycle, Mycielski, Path, Petersen, Random
from chroma.oracle import NoNonAdjacentPair

import bruteforce as bf
from strategies import graphs

C4 = Cycle(4).generate()
C5 = Cycle(5).generate()
K4 = Complete(4).generate()


def _adj(g):
    return {v: set(g.neighbors(v)) for v in g}


def test_is_k_colorable_examples():
    col = is_k_colorable(C4, 2)
    assert col is not None and is_proper_coloring(C4, col.assignment) and col.k <= 2
    assert is_k_colorable(C5, 2) is None
    assert is_k_colorable(K4, 3) is None


def test_is_k_colorable_rejects_zero():
    with pytest.raises(ValueError):
        is_k_colorable(C4, 0)


def test_exact_examples():
    assert exact_chromatic_number(K4) == 4
    assert exact_chromatic_number(C5) == 3
    grotzsch = Mycielski(Cycle(5), 1).generate()
    assert len(max_clique(grotzsch)) == 2
    assert exact_chromatic_number(grotzsch) == 4


def test_max_clique_examples():
    assert max_clique(Complete(5).generate()).vertices == frozenset(range(5))
    res = max_clique(C5)
    assert len(res) == 2 and res.exact
    petersen = Petersen().generate()
    assert bf.max_clique_size(_adj(petersen)) == 2
    assert len(max_clique(petersen)) == 2


def test_budget_exhaustion():
    g = Random(30, 0.5, 1).generate()
    with pytest.raises(BudgetExhausted):
        exact_chromatic_number(g, Budget(max_nodes=10))
    res = max_clique(g, Budget(max_nodes=3))
    assert not res.exact
    assert all(
        g.has_edge(u, v) for u in res.vertices for v in res.vertices if u < v
    )


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(max_nodes=0)


def _canon(partitions):
    return {frozenset(p) for p in partitions}


def test_enumerate_partitions_examples():
    enum = enumerate_chromatic_partitions(Complete(3).generate())
    assert enum.chi == 3 and enum.partitions == [(frozenset({0}), frozenset({1}), frozenset({2}))]
    enum = enumerate_chromatic_partitions(Path(3).generate())
    assert _canon(enum.partitions) == {frozenset({frozenset({0, 2}), frozenset({1})})}
    g0 = C5.delete_vertices({0, 2})
    chi, expected = bf.optimal_partitions(_adj(g0))
    enum = enumerate_chromatic_partitions(g0)
    assert enum.chi == chi == 2
    # {1} + {3, 4} is not a candidate: 3 and 4 are adjacent
    assert _canon(enum.partitions) == expected == {
        frozenset({frozenset({1, 3}), frozenset({4})}),
        frozenset({frozenset({1, 4}), frozenset({3})}),
    }


def test_enumerate_truncation():
    g = build_graph(6, [(0, 1)])
    full = enumerate_chromatic_partitions(g)
    assert not full.truncated
    capped = enumerate_chromatic_partitions(g, Budget(max_partitions=len(full.partitions)))
    assert not capped.truncated and capped.partitions == full.partitions
    capped = enumerate_chromatic_partitions(g, Budget(max_partitions=2))
    assert capped.truncated and capped.partitions == full.partitions[:2]


@given(graphs(max_n=8))
def test_enumerate_matches_brute_force(g):
    enum = enumerate_chromatic_partitions(g)
    chi, expected = bf.optimal_partitions(_adj(g))
    assert enum.chi == chi
    assert len(enum.partitions) == len(expected)
    assert _canon(enum.partitions) == expected
    for p in enum.partitions:
        assert [min(c) for c in p] == sorted(min(c) for c in p)
        assert all(g.is_independent_set(c) for c in p)


def test_condition1_k4_minus_edge():
    g = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rep = check_condition1(g)
    assert rep.pair == (0, 1)
    assert rep.partitions_checked == 1
    assert rep.holds_for_some_partition and rep.holds_for_all_partitions
    assert rep.witness_partition is None


def test_condition1_c5():
    rep = check_condition1(C5)
    assert rep.pair == (0, 2)
    assert rep.partitions_checked == 2
    assert rep.holds_for_some_partition
    assert not rep.holds_for_all_partitions
    assert rep.violating_partitions == 1
    # class {3} misses N(0) = {1, 4} but meets N(2) = {1, 3}
    assert _canon([rep.witness_partition]) == {frozenset({frozenset({1, 4}), frozenset({3})})}


def test_condition1_p4():
    rep = check_condition1(Path(4).generate())
    assert rep.pair == (0, 2)
    assert rep.chi_reduced == 1
    assert rep.partitions_checked == 1
    assert rep.holds_for_all_partitions


def test_condition1_errors():
    with pytest.raises(NoNonAdjacentPair):
        check_condition1(K4)
    with pytest.raises(GraphError):
        check_condition1(build_graph(2, []))


def _condition1_brute(g):
    adj = _adj(g)
    _, pairs = bf.max_pairs(adj)
    u0, v0 = pairs[0]
    rest = {w: adj[w] - {u0, v0} for w in adj if w not in (u0, v0)}
    _, parts = bf.optimal_partitions(rest)
    verdicts = [
        all(not (set(cls) & adj[v0]) for cls in p if not (set(cls) & adj[u0]))
        for p in parts
    ]
    return any(verdicts), all(verdicts), len(verdicts)


def test_condition1_matches_brute_force():
    rnd = random.Random(3)
    for _ in range(150):
        n = rnd.randint(3, 8)
        g = build_graph(n, bf.random_edges(rnd, n, rnd.choice([0.3, 0.5, 0.7])))
        if g.is_complete():
            continue
        rep = check_condition1(g)
        assert (rep.holds_for_some_partition, rep.holds_for_all_partitions, rep.partitions_checked) == \
            _condition1_brute(g)


def test_exact_agrees_with_kn_brute_force_300():
    rnd = random.Random(8)
    for _ in range(300):
        n = rnd.randint(1, 8)
        g = build_graph(n, bf.random_edges(rnd, n, rnd.choice([0.2, 0.4, 0.6, 0.8])))
        chi = exact_chromatic_number(g)
        for k in range(1, 5):
            assert (is_k_colorable(g, k) is not None) == bf.colorable_kn(n, g.edges(), k)
        small = [k for k in range(1, 5) if bf.colorable_kn(n, g.edges(), k)]
        if small:
            assert chi == small[0]
        else:
            assert chi == bf.chromatic_by_partitions(_adj(g)) >= 5


@given(graphs(max_n=9))
def test_oracle_properties(g):
    chi = exact_chromatic_number(g)
    clique = max_clique(g)
    assert clique.exact
    assert len(clique) == bf.max_clique_size(_adj(g)) <= chi
    col = optimal_coloring(g)
    assert col.k == chi
    assert is_proper_coloring(g, col.assignment)
    colorable = [is_k_colorable(g, k) is not None for k in range(1, g.num_vertices + 1)]
    assert colorable == sorted(colorable)  # monotone in k
    assert colorable.index(True) + 1 == chi
