"""Node feature encoding: categorical one-hots with vocab caps plus degree."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..graph import PropertyGraph

# low-cardinality demographics only: high-cardinality identifying
# attributes (names, city, employer) would let a transductive model
# fingerprint 2-hop neighborhoods instead of learning structure
DEFAULT_FEATURE_ATTRS = ["gender", "ethnicity"]


@dataclass
class FeatureEncoder:
    """Deterministic attribute -> one-hot encoder with a reserved overflow slot.

    Vocabulary is built on the training graph; unseen or overflow categories
    map to slot 0 of each attribute block. The final column is degree,
    normalized by the max degree seen at fit time.
    """

    attributes: list[str] = field(default_factory=lambda: list(DEFAULT_FEATURE_ATTRS))
    vocab_cap: int = 32
    vocab: dict[str, dict[str, int]] = field(default_factory=dict)
    max_degree: int = 1
    fitted: bool = False

    @property
    def dim(self) -> int:
        return sum(len(self.vocab.get(a, {})) + 1 for a in self.attributes) + 1

    def fit(self, g: PropertyGraph) -> "FeatureEncoder":
        self.vocab = {}
        for attr in self.attributes:
            counts: dict[str, int] = {}
            for node in g.nodes:
                v = node.attributes.get(attr)
                if v:
                    counts[v] = counts.get(v, 0) + 1
            # keep the (cap - 1) most frequent values; ties broken by value
            top = sorted(counts, key=lambda v: (-counts[v], v))[: self.vocab_cap - 1]
            self.vocab[attr] = {v: i + 1 for i, v in enumerate(sorted(top))}
        self.max_degree = max((g.degree(u) for u in range(g.n_nodes)), default=1) or 1
        self.fitted = True
        return self

    def transform(self, g: PropertyGraph) -> np.ndarray:
        if not self.fitted:
            raise RuntimeError("encoder not fitted")
        rows = np.zeros((g.n_nodes, self.dim))
        for node in g.nodes:
            col = 0
            for attr in self.attributes:
                vocab = self.vocab.get(attr, {})
                block = len(vocab) + 1
                v = node.attributes.get(attr)
                if v:
                    rows[node.id, col + vocab.get(v, 0)] = 1.0
                col += block
            rows[node.id, -1] = min(g.degree(node.id) / self.max_degree, 1.0)
        return rows

    def fit_transform(self, g: PropertyGraph) -> np.ndarray:
        return self.fit(g).transform(g)

    def to_dict(self) -> dict:
        return {
            "attributes": self.attributes,
            "vocab_cap": self.vocab_cap,
            "vocab": self.vocab,
            "max_degree": self.max_degree,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FeatureEncoder":
        return cls(
            attributes=list(d["attributes"]),
            vocab_cap=int(d["vocab_cap"]),
            vocab={a: dict(v) for a, v in d["vocab"].items()},
            max_degree=int(d["max_degree"]),
            fitted=True,
        )
