import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from c5pair.chordal import (
    TreeDecomposition,
    centroid_bag,
    clique_tree,
    components_without,
    is_chordal,
    max_weight_clique_chordal,
    mcs_order,
    verify_clique_tree,
)
from c5pair.errors import NotChordalError
from c5pair.gen import random_chordal_graph
from c5pair.graphs import UndirectedGraph

from conftest import all_cliques, induced_cycle_exists, random_undirected


def complete(n):
    return UndirectedGraph(~np.eye(n, dtype=bool))


def cycle(n):
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def chordal_graph(n, seed):
    adj, _ = random_chordal_graph(n, np.random.default_rng(seed))
    perm = np.random.default_rng(seed + 1).permutation(n)
    return UndirectedGraph(adj[np.ix_(perm, perm)])


def test_mcs_examples():
    assert mcs_order(UndirectedGraph(np.zeros((3, 3), dtype=bool))) == [0, 1, 2]
    assert mcs_order(complete(3)) == [0, 1, 2]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 30), st.integers(0, 10**6))
def test_mcs_is_a_permutation(n, seed):
    g = random_undirected(n, 0.3, np.random.default_rng(seed))
    assert sorted(mcs_order(g)) == list(range(n))


def test_is_chordal_examples():
    assert is_chordal(cycle(4)) == (False, (0, 1, 2, 3))
    for n in range(1, 7):
        assert is_chordal(complete(n)) == (True, None)


def check_hole(g, hole):
    k = len(hole)
    assert k >= 4 and len(set(hole)) == k
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i) in (1, k - 1)
            assert g.adj[hole[i], hole[j]] == adjacent


def test_is_chordal_against_induced_cycle_enumeration():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 9))
        g = random_undirected(n, float(rng.choice([0.2, 0.4, 0.6, 0.8])), rng)
        verdict, hole = is_chordal(g)
        assert verdict == (not induced_cycle_exists(g.adj.tolist()))
        if not verdict:
            check_hole(g, hole)


def test_clique_tree_examples():
    star = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    td = clique_tree(star)
    assert td.bags == ((0, 1), (0, 2), (0, 3))
    assert len(td.tree_edges) == 2
    assert verify_clique_tree(star, td) == []
    td = clique_tree(complete(5))
    assert td.bags == ((0, 1, 2, 3, 4),) and td.tree_edges == ()


def test_clique_tree_rejects_non_chordal():
    with pytest.raises(NotChordalError) as exc:
        clique_tree(cycle(5))
    assert len(exc.value.hole) == 5


def test_verify_clique_tree_detects_broken_subtree():
    path = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    bad = TreeDecomposition(((0, 1), (1, 2), (2, 3)), ((0, 2), (2, 1)))
    assert any("not connected" in p for p in verify_clique_tree(path, bad))


@pytest.mark.parametrize("seed", range(60))
def test_clique_tree_invariants_random_chordal(seed):
    n = 1 + (seed * 37) % 200
    g = chordal_graph(n, seed)
    assert is_chordal(g)[0]
    td = clique_tree(g)
    assert len(td.bags) <= n
    assert verify_clique_tree(g, td) == []


def test_max_weight_clique_examples():
    assert max_weight_clique_chordal(complete(3), [1, 2, 3]) == (0, 1, 2)
    assert max_weight_clique_chordal(UndirectedGraph(np.zeros((3, 3), dtype=bool)), [4, 9, 2]) == (1,)
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert max_weight_clique_chordal(path, [1, 5, 1]) == (0, 1)
    with pytest.raises(NotChordalError):
        max_weight_clique_chordal(cycle(4), [1, 1, 1, 1])


def test_max_weight_clique_matches_enumeration():
    rng = np.random.default_rng(3)
    for seed in range(150):
        n = int(rng.integers(1, 13))
        g = chordal_graph(n, seed)
        w = rng.integers(0, 10, size=n).tolist()
        got = max_weight_clique_chordal(g, w)
        best = max(sum(w[v] for v in c) for c in all_cliques(g.adj.tolist()))
        assert sum(w[v] for v in got) == best
        assert all(g.adj[a, b] for a in got for b in got if a != b)


def centroid_ok(g, bag, weights):
    total = sum(weights)
    return all(2 * sum(weights[v] for v in comp) <= total for comp in components_without(g, bag))


def test_centroid_single_bag():
    g = complete(4)
    td = clique_tree(g)
    assert centroid_bag(g, td, [1, 1, 1, 1]) == 0


def test_centroid_path_of_triangles():
    g = UndirectedGraph.from_edges(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
    td = clique_tree(g)
    w = [1] * 7
    qualifying = [i for i, bag in enumerate(td.bags) if centroid_ok(g, bag, w)]
    assert [td.bags[i] for i in qualifying] == [(2, 3, 4)]
    assert td.bags[centroid_bag(g, td, w)] == (2, 3, 4)


def test_centroid_random_chordal():
    rng = np.random.default_rng(11)
    for seed in range(100):
        n = int(rng.integers(1, 200))
        g = chordal_graph(n, seed)
        td = clique_tree(g)
        w = rng.integers(1, 6, size=n).tolist()
        i = centroid_bag(g, td, w)
        assert centroid_ok(g, td.bags[i], w)
        assert not any(centroid_ok(g, td.bags[j], w) for j in range(i))
