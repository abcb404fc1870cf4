"""Attribute-level comparison of the two endpoints of a predicted link."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import PropertyGraph
from ..match import edit_distance, normalize


@dataclass
class NodeComparison:
    attributes: dict[str, dict]
    neighbor_jaccard: float

    def to_dict(self) -> dict:
        return {
            "attributes": self.attributes,
            "neighbor_jaccard": self.neighbor_jaccard,
        }


def _similarity(a: str, b: str) -> float:
    a, b = normalize(a), normalize(b)
    if not a and not b:
        return 1.0
    longest = max(len(a), len(b))
    return 1.0 - edit_distance(a, b) / longest


def compare_nodes(g: PropertyGraph, u: int, v: int) -> NodeComparison:
    """Per shared attribute: both values plus normalized edit similarity;
    plus the Jaccard coefficient of the two neighbor sets."""
    au = g.nodes[u].attributes
    av = g.nodes[v].attributes
    attrs = {}
    for key in sorted(set(au) & set(av)):
        x, y = au[key], av[key]
        if x is None or y is None:
            continue
        attrs[key] = {
            "value_u": x,
            "value_v": y,
            "similarity": _similarity(str(x), str(y)),
        }
    nu, nv = set(g.neighbors(u)), set(g.neighbors(v))
    union = nu | nv
    jaccard = len(nu & nv) / len(union) if union else 0.0
    return NodeComparison(attributes=attrs, neighbor_jaccard=jaccard)
