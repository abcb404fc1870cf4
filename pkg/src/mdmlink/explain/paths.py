"""Connecting-path enumeration and rarity-based ranking."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from ..graph import PropertyGraph


def enumerate_paths(g: PropertyGraph, u: int, v: int, max_len: int = 4,
                    max_paths: int = 100) -> list[list[int]]:
    """All simple paths from u to v up to max_len edges, BFS (shortest-first)
    order, truncated at max_paths."""
    if u == v:
        raise ValueError("endpoints must differ")
    paths: list[list[int]] = []
    queue: deque[list[int]] = deque([[u]])
    while queue and len(paths) < max_paths:
        path = queue.popleft()
        last = path[-1]
        for nb in g.neighbors(last):
            if nb == v:
                paths.append(path + [v])
                if len(paths) >= max_paths:
                    break
            elif nb not in path and len(path) < max_len:
                queue.append(path + [nb])
    return paths


def relation_frequencies(g: PropertyGraph) -> dict[str, float]:
    counts: dict[str, int] = {}
    for e in g.edges:
        counts[e.relation] = counts.get(e.relation, 0) + 1
    total = max(g.n_edges, 1)
    return {rel: c / total for rel, c in counts.items()}


def _relation_lookup(g: PropertyGraph) -> dict[tuple[int, int], str]:
    lookup: dict[tuple[int, int], str] = {}
    for e in g.edges:
        lookup.setdefault((min(e.src, e.dst), max(e.src, e.dst)), e.relation)
    return lookup


@dataclass
class RankedPath:
    nodes: list[int]
    relations: list[str]
    score: float
    breakdown: list[dict]

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "relations": self.relations,
            "score": self.score,
            "breakdown": self.breakdown,
        }


@dataclass
class PathExplanation:
    paths: list[RankedPath]

    def to_dict(self) -> dict:
        return {"paths": [p.to_dict() for p in self.paths]}


def rank_paths(g: PropertyGraph, paths: list[list[int]],
               top_k: int = 3) -> PathExplanation:
    """Score each path by summed relation-type rarity over squared length.

    score = (sum over edges of log(1 / freq(relation))) / len(path)^2, so rare
    relations help and long chains are penalized quadratically. Ties break by
    the lexicographic node sequence.
    """
    freqs = relation_frequencies(g)
    lookup = _relation_lookup(g)
    ranked = []
    for path in paths:
        breakdown = []
        total = 0.0
        relations = []
        for a, b in zip(path, path[1:]):
            rel = lookup[(min(a, b), max(a, b))]
            relations.append(rel)
            rarity = math.log(1.0 / freqs[rel])
            total += rarity
            breakdown.append({"src": a, "dst": b, "relation": rel,
                              "frequency": freqs[rel], "rarity": rarity})
        length = len(path) - 1
        ranked.append(RankedPath(nodes=list(path), relations=relations,
                                 score=total / (length * length),
                                 breakdown=breakdown))
    ranked.sort(key=lambda p: (-p.score, p.nodes))
    return PathExplanation(paths=ranked[:top_k])
