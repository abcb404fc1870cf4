import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mdmlink.errors import (
    DanglingEdgeError,
    DuplicateEdgeError,
    DuplicateNodeError,
    SelfLoopError,
)
from mdmlink.graph import (
    Edge,
    Node,
    PropertyGraph,
    bfs_distances,
    build_graph,
    connected_components,
    filter_components,
    load_graph,
    save_graph,
)


def make_graph(n, pairs, relation="knows"):
    nodes = [Node(i, "person", {}) for i in range(n)]
    edges = [Edge(a, b, relation) for a, b in pairs]
    return build_graph(nodes, edges)


def random_graph(rng, n, p):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)
             if rng.random() < p]
    return make_graph(n, pairs)


def floyd_warshall(g):
    n = g.n_nodes
    inf = float("inf")
    dist = [[inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for e in g.edges:
        dist[e.src][e.dst] = 1
        dist[e.dst][e.src] = 1
    for k in range(n):
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            for j in range(n):
                if dik + dist[k][j] < dist[i][j]:
                    dist[i][j] = dik + dist[k][j]
    return dist


class TestBuildGraph:
    def test_rejects_duplicate_nodes(self):
        nodes = [Node(0, "person", {}), Node(0, "person", {})]
        with pytest.raises(DuplicateNodeError):
            build_graph(nodes, [])

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            make_graph(2, [(0, 0)])

    def test_rejects_dangling_edge(self):
        with pytest.raises(DanglingEdgeError):
            make_graph(2, [(0, 5)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError):
            make_graph(2, [(0, 1), (1, 0)])

    def test_adjacency_sorted(self):
        g = make_graph(4, [(2, 0), (0, 3), (0, 1)])
        assert g.neighbors(0) == [1, 2, 3]
        assert g.degree(0) == 3
        assert g.has_edge(0, 2) and g.has_edge(2, 0)
        assert not g.has_edge(1, 2)


class TestBfsDistances:
    def test_against_floyd_warshall(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 51))
            g = random_graph(rng, n, float(rng.uniform(0.02, 0.3)))
            dist = floyd_warshall(g)
            for src in range(n):
                got = bfs_distances(g, src, cutoff=n)
                for v in range(n):
                    if dist[src][v] == float("inf"):
                        assert v not in got
                    else:
                        assert got[v] == dist[src][v]

    def test_cutoff_limits_depth(self):
        g = make_graph(6, [(i, i + 1) for i in range(5)])
        got = bfs_distances(g, 0, cutoff=3)
        assert got == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_source_distance_zero(self):
        g = make_graph(2, [(0, 1)])
        assert bfs_distances(g, 0, cutoff=6)[0] == 0

    @given(st.integers(1, 12), st.integers(0, 1000))
    @settings(max_examples=50, deadline=None)
    def test_symmetry(self, n, seed):
        rng = np.random.default_rng(seed)
        g = random_graph(rng, n, 0.3)
        for u in range(n):
            du = bfs_distances(g, u, cutoff=n)
            for v, d in du.items():
                assert bfs_distances(g, v, cutoff=n)[u] == d


class TestComponents:
    def test_two_components(self):
        g = make_graph(5, [(0, 1), (1, 2), (3, 4)])
        comps = connected_components(g)
        assert [sorted(c) for c in comps] == [[0, 1, 2], [3, 4]]

    def test_largest_first(self):
        g = make_graph(7, [(0, 1), (2, 3), (3, 4), (4, 5)])
        sizes = [len(c) for c in connected_components(g)]
        assert sizes == sorted(sizes, reverse=True)

    def test_filter_components_drops_small(self):
        pairs = [(i, i + 1) for i in range(10)] + [(11, 12)]
        g = make_graph(13, pairs)
        fg, id_map = filter_components(g, min_size=10)
        assert fg.n_nodes == 11
        assert fg.n_edges == 10
        # map covers exactly the kept nodes, old id -> dense new id
        assert sorted(id_map) == list(range(11))
        assert sorted(id_map.values()) == list(range(11))

    def test_filter_preserves_structure(self):
        pairs = [(i, (i + 1) % 12) for i in range(12)]
        g = make_graph(14, pairs + [(12, 13)])
        fg, id_map = filter_components(g, min_size=10)
        assert fg.n_nodes == 12
        # the ring survives intact
        assert all(fg.degree(u) == 2 for u in range(fg.n_nodes))


class TestPersistence:
    def test_round_trip(self, tmp_path):
        nodes = [Node(0, "person", {"given_name": "ANNA"}),
                 Node(1, "person", {"city": "BOSTON"})]
        edges = [Edge(0, 1, "spouse", {"since": "2001"})]
        g = build_graph(nodes, edges)
        save_graph(g, tmp_path / "g")
        g2 = load_graph(tmp_path / "g")
        assert g == g2

    def test_round_trip_random(self, tmp_path):
        rng = np.random.default_rng(3)
        g = random_graph(rng, 30, 0.1)
        save_graph(g, tmp_path / "g")
        assert load_graph(tmp_path / "g") == g
