"""Property-graph data model: build, components, truncated BFS, JSONL persistence.

Graphs are undirected and simple per (src, dst, relation) triple. Node ids are
dense integers so adjacency and embedding matrices can be array-indexed.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .errors import (
    DanglingEdgeError,
    DuplicateEdgeError,
    DuplicateNodeError,
    EmptyResultError,
    SchemaMismatchError,
    SelfLoopError,
    UnknownNodeError,
)

PERSON = "person"
ORG = "org"
NODE_KINDS = (PERSON, ORG)


@dataclass
class Node:
    id: int
    kind: str = PERSON
    attributes: dict[str, str] = field(default_factory=dict)


@dataclass
class Edge:
    src: int
    dst: int
    relation: str
    properties: dict = field(default_factory=dict)

    def key(self) -> tuple[int, int, str]:
        u, v = (self.src, self.dst) if self.src <= self.dst else (self.dst, self.src)
        return (u, v, self.relation)


class PropertyGraph:
    """Immutable-after-build undirected property graph.

    ``adjacency`` holds sorted unique neighbor lists derived from the edge
    list; it is rebuilt on load rather than persisted.
    """

    def __init__(self, nodes: list[Node], edges: list[Edge], adjacency: list[list[int]]):
        self.nodes = nodes
        self.edges = edges
        self.adjacency = adjacency

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> list[int]:
        if u < 0 or u >= len(self.nodes):
            raise UnknownNodeError(f"node {u} not in graph")
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adjacency[u]) <= len(self.adjacency[v]) else (v, u)
        return b in self._neighbor_sets()[a]

    def _neighbor_sets(self) -> list[set[int]]:
        cached = getattr(self, "_nbr_sets", None)
        if cached is None:
            cached = [set(a) for a in self.adjacency]
            self._nbr_sets = cached
        return cached

    def __eq__(self, other) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return (
            [(n.id, n.kind, n.attributes) for n in self.nodes]
            == [(n.id, n.kind, n.attributes) for n in other.nodes]
            and sorted((e.key(), e.properties) for e in self.edges)
            == sorted((e.key(), e.properties) for e in other.edges)
        )


def build_graph(nodes: list[Node], edges: list[Edge]) -> PropertyGraph:
    """Validate nodes/edges and build adjacency.

    Node ids must be dense 0..n-1 and unique; edges must reference existing
    nodes, carry no self loops, and repeat no (u, v, relation) triple.
    """
    n = len(nodes)
    seen_ids = set()
    for node in nodes:
        if node.id in seen_ids:
            raise DuplicateNodeError(f"duplicate node id {node.id}")
        seen_ids.add(node.id)
    if seen_ids and (min(seen_ids) != 0 or max(seen_ids) != n - 1):
        raise DuplicateNodeError("node ids must be dense 0..n-1")
    nodes = sorted(nodes, key=lambda nd: nd.id)

    seen_edges = set()
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        if edge.src == edge.dst:
            raise SelfLoopError(f"self loop on node {edge.src}")
        if not (0 <= edge.src < n and 0 <= edge.dst < n):
            raise DanglingEdgeError(f"edge ({edge.src},{edge.dst}) references missing node")
        key = edge.key()
        if key in seen_edges:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen_edges.add(key)
        adjacency[edge.src].add(edge.dst)
        adjacency[edge.dst].add(edge.src)

    return PropertyGraph(nodes, list(edges), [sorted(a) for a in adjacency])


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def connected_components(g: PropertyGraph) -> list[set[int]]:
    """Partition node ids into connected components (largest first)."""
    uf = UnionFind(g.n_nodes)
    for e in g.edges:
        uf.union(e.src, e.dst)
    groups: dict[int, set[int]] = {}
    for v in range(g.n_nodes):
        groups.setdefault(uf.find(v), set()).add(v)
    return sorted(groups.values(), key=lambda s: (-len(s), min(s)))


def filter_components(
    g: PropertyGraph, min_size: int = 10
) -> tuple[PropertyGraph, dict[int, int]]:
    """Keep components of at least ``min_size`` nodes, re-densifying ids.

    Returns the induced subgraph and the old-id -> new-id map.
    """
    if min_size < 1:
        raise ValueError("min_size must be >= 1")
    keep: list[int] = []
    for comp in connected_components(g):
        if len(comp) >= min_size:
            keep.extend(comp)
    if not keep:
        raise EmptyResultError(f"no component has >= {min_size} nodes")
    keep.sort()
    id_map = {old: new for new, old in enumerate(keep)}
    nodes = [Node(id_map[old], g.nodes[old].kind, dict(g.nodes[old].attributes)) for old in keep]
    edges = [
        Edge(id_map[e.src], id_map[e.dst], e.relation, dict(e.properties))
        for e in g.edges
        if e.src in id_map and e.dst in id_map
    ]
    return build_graph(nodes, edges), id_map


def bfs_distances(g: PropertyGraph, source: int, cutoff: int) -> dict[int, int]:
    """Exact hop distances from ``source`` for nodes within ``cutoff`` hops."""
    if source < 0 or source >= g.n_nodes:
        raise UnknownNodeError(f"node {source} not in graph")
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier and d < cutoff:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def save_graph(g: PropertyGraph, path: str) -> None:
    """Write nodes.jsonl / edges.jsonl under directory ``path``."""
    os.makedirs(path, exist_ok=True)
    with open(os.path.join(path, "nodes.jsonl"), "w", encoding="utf-8") as f:
        for node in g.nodes:
            f.write(
                json.dumps(
                    {"id": node.id, "kind": node.kind, "attributes": node.attributes},
                    ensure_ascii=False,
                )
                + "\n"
            )
    with open(os.path.join(path, "edges.jsonl"), "w", encoding="utf-8") as f:
        for e in g.edges:
            f.write(
                json.dumps(
                    {"src": e.src, "dst": e.dst, "relation": e.relation, "properties": e.properties},
                    ensure_ascii=False,
                )
                + "\n"
            )


def load_graph(path: str) -> PropertyGraph:
    """Load a graph saved by :func:`save_graph`, revalidating all invariants."""
    nodes_path = os.path.join(path, "nodes.jsonl")
    edges_path = os.path.join(path, "edges.jsonl")
    try:
        nodes = []
        with open(nodes_path, encoding="utf-8") as f:
            for line in f:
                if not line.strip():
                    continue
                obj = json.loads(line)
                nodes.append(Node(int(obj["id"]), obj["kind"], dict(obj["attributes"])))
        edges = []
        with open(edges_path, encoding="utf-8") as f:
            for line in f:
                if not line.strip():
                    continue
                obj = json.loads(line)
                edges.append(
                    Edge(int(obj["src"]), int(obj["dst"]), obj["relation"], dict(obj.get("properties") or {}))
                )
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaMismatchError(f"malformed graph file under {path}: {exc}") from exc
    try:
        return build_graph(nodes, edges)
    except (DanglingEdgeError, SelfLoopError, DuplicateNodeError, DuplicateEdgeError) as exc:
        raise SchemaMismatchError(str(exc)) from exc
