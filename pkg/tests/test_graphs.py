import random
from itertools import combinations

import pytest

from facering import (
    Graph,
    build_complex,
    clique_complex,
    complement,
    is_chordal,
    is_quasi_forest,
    minimal_nonfaces,
    one_skeleton,
    random_chordal,
)
from facering.bits import verts_of
from facering.generators import random_quasi_forest

from helpers import brute_max_cliques, library_facets, naive_is_chordal


def _graph(n, pairs):
    return Graph.from_edges(n, pairs)


def _random_graph(n, p, rng):
    return Graph(
        n,
        frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p),
    )


def test_complement_examples():
    k3 = _graph(3, [(1, 2), (1, 3), (2, 3)])
    assert complement(k3).edges == frozenset()
    path = _graph(3, [(1, 2), (2, 3)])
    assert complement(path).edges == frozenset({(1, 3)})
    c4 = _graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert complement(c4).edges == frozenset({(1, 3), (2, 4)})


def test_complement_is_involution():
    rng = random.Random(11)
    for n in range(1, 9):
        for _ in range(20):
            g = _random_graph(n, rng.random(), rng)
            assert complement(complement(g)) == g


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 4)}))


def test_clique_complex_examples():
    path = _graph(3, [(1, 2), (2, 3)])
    assert library_facets(clique_complex(path)) == [(1, 2), (2, 3)]
    k3 = _graph(3, [(1, 2), (1, 3), (2, 3)])
    assert library_facets(clique_complex(k3)) == [(1, 2, 3)]
    c4 = _graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert library_facets(clique_complex(c4)) == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_clique_complex_matches_subset_scan():
    rng = random.Random(23)
    for n in range(1, 8):
        for _ in range(15):
            g = _random_graph(n, rng.random(), rng)
            assert library_facets(clique_complex(g)) == brute_max_cliques(g)


def test_chordality_examples():
    c4 = _graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    flag, witness = is_chordal(c4)
    assert not flag and sorted(witness) == [1, 2, 3, 4]
    k4 = _graph(4, [p for p in combinations(range(1, 5), 2)])
    assert is_chordal(k4)[0]
    flag, order = is_chordal(_graph(3, [(1, 2), (2, 3)]))
    assert flag and sorted(order) == [1, 2, 3]


def test_chordality_matches_naive_oracle():
    rng = random.Random(5)
    for n in range(1, 10):
        for _ in range(25):
            g = _random_graph(n, rng.random(), rng)
            assert is_chordal(g)[0] == naive_is_chordal(g), g


def test_elimination_order_witness_is_perfect():
    rng = random.Random(17)
    for _ in range(40):
        g = random_chordal(9, rng.random(), rng.randrange(10**9))
        flag, order = is_chordal(g)
        assert flag
        pos = {v: i for i, v in enumerate(order)}
        adj = {v: set() for v in range(1, g.n + 1)}
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        for v in order:
            later = [w for w in adj[v] if pos[w] > pos[v]]
            for a, b in combinations(later, 2):
                assert b in adj[a], (g, v, a, b)


def test_chordless_cycle_witness_is_induced():
    rng = random.Random(29)
    found = 0
    for n in range(4, 10):
        for _ in range(30):
            g = _random_graph(n, rng.random(), rng)
            flag, witness = is_chordal(g)
            if flag:
                continue
            found += 1
            cyc = list(witness)
            assert len(cyc) >= 4
            edges = {frozenset(e) for e in g.edges}
            for i, v in enumerate(cyc):
                assert frozenset({v, cyc[(i + 1) % len(cyc)]}) in edges
            for i, j in combinations(range(len(cyc)), 2):
                adjacent = abs(i - j) in (1, len(cyc) - 1)
                assert (frozenset({cyc[i], cyc[j]}) in edges) == adjacent
    assert found > 20


def test_minimal_nonfaces_of_clique_complex_are_complement_edges():
    rng = random.Random(41)
    for n in range(2, 9):
        for _ in range(15):
            g = _random_graph(n, rng.random(), rng)
            mnf = sorted(verts_of(m) for m in minimal_nonfaces(clique_complex(g)))
            assert mnf == sorted(complement(g).sorted_edges())


def test_random_chordal_properties():
    assert random_chordal(1, 0.5, 3).edges == frozenset()
    k5 = random_chordal(5, 1, 9)
    assert len(k5.edges) == 10
    g = random_chordal(8, 0.4, 7)
    assert is_chordal(g)[0]
    assert random_chordal(8, 0.4, 7) == g  # deterministic per seed
    for seed in range(40):
        assert is_chordal(random_chordal(10, 0.35, seed))[0]


def test_chordal_clique_complexes_are_quasi_forests():
    for seed in range(40):
        g = random_chordal(8, 0.5, seed)
        assert is_quasi_forest(clique_complex(g))[0]


def test_quasi_forest_skeletons_are_chordal():
    for seed in range(40):
        q = random_quasi_forest(9, seed)
        assert is_quasi_forest(q)[0]
        assert is_chordal(one_skeleton(q))[0]


def test_one_skeleton_edges_are_the_one_faces():
    sc = build_complex(4, [[1, 2, 3], [3, 4]])
    g = one_skeleton(sc)
    assert g.sorted_edges() == [(1, 2), (1, 3), (2, 3), (3, 4)]
