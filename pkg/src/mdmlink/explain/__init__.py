from .paths import PathExplanation, RankedPath, enumerate_paths, rank_paths
from .retrieval import (
    TextIndex,
    VerificationEvidence,
    build_text_index,
    retrieve_verification,
)
from .comparison import NodeComparison, compare_nodes
from .bundle import ExplanationBundle, explain_link

__all__ = [
    "PathExplanation",
    "RankedPath",
    "enumerate_paths",
    "rank_paths",
    "TextIndex",
    "VerificationEvidence",
    "build_text_index",
    "retrieve_verification",
    "NodeComparison",
    "compare_nodes",
    "ExplanationBundle",
    "explain_link",
]
