"""Single-call explanation bundle for a predicted link."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import PropertyGraph
from .comparison import NodeComparison, compare_nodes
from .paths import PathExplanation, enumerate_paths, rank_paths
from .retrieval import TextIndex, VerificationEvidence, retrieve_verification


@dataclass
class ExplanationBundle:
    source: int
    target: int
    score: float
    paths: PathExplanation
    evidence: VerificationEvidence
    comparison: NodeComparison

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "score": self.score,
            "paths": self.paths.to_dict(),
            "evidence": self.evidence.to_dict(),
            "comparison": self.comparison.to_dict(),
        }


def explain_link(g: PropertyGraph, index: TextIndex | None, u: int, v: int,
                 score: float = 0.0, max_len: int = 4,
                 top_k_paths: int = 3) -> ExplanationBundle:
    paths = rank_paths(g, enumerate_paths(g, u, v, max_len=max_len),
                       top_k=top_k_paths)
    if index is not None:
        evidence = retrieve_verification(
            index, g.nodes[u].attributes, g.nodes[v].attributes
        )
    else:
        evidence = VerificationEvidence(snippets=[])
    comparison = compare_nodes(g, u, v)
    return ExplanationBundle(source=u, target=v, score=score, paths=paths,
                             evidence=evidence, comparison=comparison)
