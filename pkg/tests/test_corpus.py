import pytest

from chroma import GraphError, exact_chromatic_number, generate, known_chromatic, parse_family
from chroma.corpus import (
    Complete,
    CompleteBipartite,
    Cycle,
    Mycielski,
    Path,
    Petersen,
    Random,
    Star,
)
from chroma.rng import SplitMix64, derive_seed

import bruteforce as bf

# published SplitMix64 test vectors
SPLITMIX_SEED0 = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
SPLITMIX_SEED1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]

PINNED_RANDOM = {
    (6, 0.5, 0): [(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 5), (2, 4)],
    (5, 0.3, 0): [(0, 3), (1, 2), (1, 4), (2, 4)],
    (4, 0.9, 0): [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
    (6, 0.5, 1): [(0, 4), (0, 5), (1, 5), (2, 4), (3, 4), (4, 5)],
    (5, 0.3, 1): [(2, 4)],
    (4, 0.9, 1): [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    (6, 0.5, 2**64 - 1): [(0, 3), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)],
    (5, 0.3, 2**64 - 1): [(0, 3), (2, 3), (3, 4)],
    (4, 0.9, 2**64 - 1): [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)],
}


def test_splitmix_reference_streams():
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == SPLITMIX_SEED0
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(5)] == SPLITMIX_SEED1234567


def test_derive_seed_is_stable():
    assert derive_seed(7, 4, 0.3, 0) == 5541032452141231480
    assert derive_seed(0, 5, 0.5, 1) == 3006518412384513191
    assert derive_seed(7, 4, 0.3, 0) != derive_seed(7, 4, 0.3, 1)


@pytest.mark.parametrize("key, edges", PINNED_RANDOM.items())
def test_random_pinned_edge_sets(key, edges):
    assert Random(*key).generate().edges() == edges


def test_complete():
    g = generate(Complete(4))
    assert g.num_vertices == 4 and g.num_edges == 6
    assert g.is_complete()


def test_mycielski_counts():
    g = generate(Mycielski(Cycle(5), 1))
    assert g.num_vertices == 11 and g.num_edges == 20
    # triangle-free
    adj = {v: set(g.neighbors(v)) for v in g}
    assert bf.max_clique_size(adj) == 2


def test_mycielski_zero_iterations_is_base():
    assert generate(Mycielski(Cycle(5), 0)) == generate(Cycle(5))


def test_random_extremes():
    assert generate(Random(10, 0.0, 3)).num_edges == 0
    assert generate(Random(10, 1.0, 3)).num_edges == 45


def test_petersen_shape():
    g = generate(Petersen())
    assert g.num_vertices == 10 and g.num_edges == 15
    assert all(g.degree(v) == 3 for v in g)


@pytest.mark.parametrize(
    "family, chi",
    [
        (Cycle(7), 3),
        (Cycle(8), 2),
        (CompleteBipartite(3, 3), 2),
        (Mycielski(Cycle(5), 1), 4),
        (Mycielski(Complete(2), 2), 4),
        (Path(1), 1),
        (Star(1), 1),
        (Star(5), 2),
        (Petersen(), 3),
        (Random(5, 0.5, 1), None),
        (Mycielski(Random(5, 0.5, 1), 1), None),
    ],
)
def test_known_chromatic(family, chi):
    assert known_chromatic(family) == chi


def _small_families():
    for n in range(1, 9):
        yield Complete(n)
        yield Path(n)
        yield Star(n)
    for n in range(3, 15):
        yield Cycle(n)
    for a in range(1, 6):
        for b in range(1, 6):
            yield CompleteBipartite(a, b)
    yield Petersen()
    yield Mycielski(Cycle(5), 1)
    yield Mycielski(Complete(2), 1)
    yield Mycielski(Complete(1), 2)


@pytest.mark.parametrize("family", list(_small_families()), ids=str)
def test_known_chromatic_matches_oracle(family):
    g = generate(family)
    assert g.num_vertices <= 14
    assert exact_chromatic_number(g) == known_chromatic(family)
    for v in g:
        assert v not in g.neighbors(v)
        assert all(v in g.neighbors(w) for w in g.neighbors(v))


@pytest.mark.parametrize(
    "spec, family",
    [
        ("complete:4", Complete(4)),
        ("cycle:5", Cycle(5)),
        ("path:3", Path(3)),
        ("kbipartite:3,4", CompleteBipartite(3, 4)),
        ("star:6", Star(6)),
        ("petersen", Petersen()),
        ("mycielski:cycle:5:1", Mycielski(Cycle(5), 1)),
        ("mycielski:mycielski:complete:2:1:1", Mycielski(Mycielski(Complete(2), 1), 1)),
        ("random:10,0.5,1", Random(10, 0.5, 1)),
    ],
)
def test_parse_family(spec, family):
    assert parse_family(spec) == family
    assert parse_family(str(family)) == family


@pytest.mark.parametrize(
    "spec",
    ["random:10,1.5,1", "random:10,-0.1,1", "cycle:2", "complete:0", "cycle:x", "kbipartite:3",
     "petersen:3", "mycielski:cycle:5", "hypercube:3", "random:10,0.5", "random:5,0.5,-1", ""],
)
def test_parse_family_rejects(spec):
    with pytest.raises(GraphError):
        parse_family(spec)
