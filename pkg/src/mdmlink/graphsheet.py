"""GraphSheet: a transparency document generated for every training run."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__
from .errors import IncompleteRecordError
from .graph import PropertyGraph, bfs_distances, connected_components
from .linkpred import MetricsReport, TrainConfig
from .rng import SplitMix64

SECTION_ORDER = [
    "Purpose & Intended Use",
    "Graph Facts",
    "Diversity & Protected Attributes",
    "Model & Training Config",
    "Metrics",
    "Caveats/FAQ",
]

PURPOSE = (
    "This model ranks candidate links between person nodes in a master-data "
    "graph so that data stewards can review probable but unrecorded "
    "relationships. It is intended for human-in-the-loop review, not for "
    "automated decisions about individuals."
)


def _graph_hash(g: PropertyGraph) -> str:
    h = hashlib.sha256()
    for node in g.nodes:
        h.update(json.dumps([node.id, node.kind, node.attributes],
                            sort_keys=True).encode())
    for e in g.edges:
        h.update(json.dumps([e.src, e.dst, e.relation],
                            sort_keys=True).encode())
    return h.hexdigest()[:16]


def sampled_path_length(g: PropertyGraph, n_sources: int = 100,
                        cutoff: int = 12, seed: int = 0) -> float:
    """Mean shortest-path length over BFS trees from sampled sources."""
    if g.n_nodes == 0:
        return 0.0
    rng = SplitMix64(seed).fork("graphsheet-paths")
    sources = (list(range(g.n_nodes)) if g.n_nodes <= n_sources
               else rng.sample(list(range(g.n_nodes)), n_sources))
    total, count = 0, 0
    for s in sources:
        for v, d in bfs_distances(g, s, cutoff).items():
            if v != s:
                total += d
                count += 1
    return total / count if count else 0.0


@dataclass
class RunRecord:
    dataset_id: str
    graph_hash: str
    n_nodes: int
    n_edges: int
    n_attributes: int
    relation_counts: dict[str, int]
    protected_histograms: dict[str, dict[str, int]]
    component_histogram: dict[str, int]
    avg_path_length: float
    model_kind: str
    train_config: dict
    metrics: dict
    anonymized: bool
    toolkit_version: str = field(default=__version__)

    REQUIRED = [
        "dataset_id", "graph_hash", "n_nodes", "n_edges", "n_attributes",
        "relation_counts", "protected_histograms", "component_histogram",
        "avg_path_length", "model_kind", "train_config", "metrics",
        "anonymized", "toolkit_version",
    ]

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.REQUIRED}

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        missing = [k for k in cls.REQUIRED if k not in d]
        if missing:
            raise IncompleteRecordError(f"missing fields: {missing}")
        return cls(**{k: d[k] for k in cls.REQUIRED})


def collect_facts(g: PropertyGraph, config: TrainConfig, model_kind: str,
                  metrics: MetricsReport, anonymized: bool,
                  dataset_id: str = "demo",
                  protected_attributes: list[str] | None = None) -> RunRecord:
    protected = (protected_attributes if protected_attributes is not None
                 else ["gender", "ethnicity"])
    attrs = set()
    for node in g.nodes:
        attrs.update(k for k, v in node.attributes.items() if v is not None)
    relation_counts: dict[str, int] = {}
    for e in g.edges:
        relation_counts[e.relation] = relation_counts.get(e.relation, 0) + 1
    histograms: dict[str, dict[str, int]] = {}
    for attr in protected:
        hist: dict[str, int] = {}
        for node in g.nodes:
            v = node.attributes.get(attr)
            if v is not None:
                hist[str(v)] = hist.get(str(v), 0) + 1
        histograms[attr] = dict(sorted(hist.items()))
    comp_hist: dict[str, int] = {}
    for comp in connected_components(g):
        key = str(len(comp))
        comp_hist[key] = comp_hist.get(key, 0) + 1
    return RunRecord(
        dataset_id=dataset_id,
        graph_hash=_graph_hash(g),
        n_nodes=g.n_nodes,
        n_edges=g.n_edges,
        n_attributes=len(attrs),
        relation_counts=dict(sorted(relation_counts.items())),
        protected_histograms=histograms,
        component_histogram=dict(sorted(comp_hist.items(),
                                        key=lambda kv: int(kv[0]))),
        avg_path_length=sampled_path_length(g, n_sources=100, seed=config.seed),
        model_kind=model_kind,
        train_config=config.to_dict(),
        metrics=metrics.to_dict(),
        anonymized=anonymized,
    )


def _faq(record: RunRecord) -> list[tuple[str, str]]:
    return [
        ("Where does the data come from?",
         f"Dataset '{record.dataset_id}' (hash {record.graph_hash}), "
         "a synthetic multi-source person graph generated by this toolkit."),
        ("Is the data anonymized?",
         "Yes, values were pseudonymized before training."
         if record.anonymized else
         "No, the graph was trained on as generated."),
        ("How were negative samples chosen?",
         "For each held-out positive pair, one endpoint is kept and paired "
         "with a random node it is not connected to in the full graph; "
         "negative and positive counts are equal."),
        ("What does the 0.5 threshold mean?",
         "A pair is reported as a predicted link when the decoder "
         "probability is at least 0.5; metrics at other operating points "
         "should be read from the ROC AUC."),
    ]


def render_graphsheet(record: RunRecord, format: str = "markdown") -> str:
    if not isinstance(record, RunRecord):
        record = RunRecord.from_dict(dict(record))
    if format == "json":
        return json.dumps(record.to_dict(), indent=2, sort_keys=True) + "\n"
    if format not in ("markdown", "md"):
        raise ValueError(f"unknown format {format!r}")
    lines = ["# GraphSheet", ""]

    lines += [f"## {SECTION_ORDER[0]}", "", PURPOSE, ""]

    lines += [f"## {SECTION_ORDER[1]}", ""]
    lines += [
        f"- Dataset: {record.dataset_id} (hash `{record.graph_hash}`)",
        f"- Persons: {record.n_nodes}",
        f"- Links: {record.n_edges}",
        f"- Attributes: {record.n_attributes}",
        f"- Relations: {len(record.relation_counts)}",
        f"- Average path length (sampled): {record.avg_path_length:.3f}",
        "- Component sizes: "
        + ", ".join(f"{size} x{count}"
                    for size, count in record.component_histogram.items()),
        "- Relation counts: "
        + ", ".join(f"{rel}={n}"
                    for rel, n in record.relation_counts.items()),
        "",
    ]

    lines += [f"## {SECTION_ORDER[2]}", ""]
    if not record.protected_histograms:
        lines += ["(no protected attributes configured)", ""]
    for attr, hist in record.protected_histograms.items():
        lines.append(f"- {attr}: "
                     + ", ".join(f"{v}={n}" for v, n in hist.items()))
    if record.protected_histograms:
        lines.append("")

    lines += [f"## {SECTION_ORDER[3]}", ""]
    lines.append(f"- Model: {record.model_kind}")
    for k, v in sorted(record.train_config.items()):
        lines.append(f"- {k}: {v}")
    lines.append(f"- Toolkit version: {record.toolkit_version}")
    lines.append("")

    lines += [f"## {SECTION_ORDER[4]}", ""]
    for k, v in sorted(record.metrics.items()):
        lines.append(f"- {k}: {v}")
    lines.append("")

    lines += [f"## {SECTION_ORDER[5]}", ""]
    for q, a in _faq(record):
        lines += [f"**{q}**", "", a, ""]
    return "\n".join(lines)
