"""Model persistence: JSON header plus little-endian float64 tensor blob."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import ArtifactMissingError, SchemaMismatchError
from ..graph import load_graph, save_graph
from .features import FeatureEncoder
from .models import GCN, PGNN
from .training import TrainConfig, TrainedModel
from .metrics import MetricsReport

FORMAT_VERSION = 1


def save_model(trained: TrainedModel, out_dir: str | Path) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    names = sorted(trained.model.params)
    header = {
        "format_version": FORMAT_VERSION,
        "kind": trained.kind,
        "config": trained.config.to_dict(),
        "encoder": trained.encoder.to_dict(),
        "params": [{"name": k, "shape": list(trained.model.params[k].shape)}
                   for k in names],
        "metrics": trained.metrics.to_dict(),
    }
    if trained.kind == "pgnn":
        header["anchor_sets"] = trained.model.anchor_sets
    (out / "model.json").write_text(json.dumps(header, indent=2) + "\n")
    blob = np.concatenate(
        [trained.model.params[k].ravel() for k in names]
    ).astype("<f8")
    (out / "params.bin").write_bytes(blob.tobytes())
    save_graph(trained.graph, out / "graph")


def load_model(model_dir: str | Path) -> TrainedModel:
    path = Path(model_dir)
    header_path = path / "model.json"
    blob_path = path / "params.bin"
    if not header_path.exists() or not blob_path.exists():
        raise ArtifactMissingError(f"no model artifacts in {path}")
    header = json.loads(header_path.read_text())
    if header.get("format_version") != FORMAT_VERSION:
        raise SchemaMismatchError(
            f"unsupported model format {header.get('format_version')}"
        )
    config = TrainConfig(**header["config"])
    encoder = FeatureEncoder.from_dict(header["encoder"])
    g = load_graph(path / "graph")
    kind = header["kind"]
    if kind == "pgnn":
        model = PGNN(g, encoder.dim, hidden=config.hidden,
                     n_layers=config.n_layers, total_anchors=config.anchors,
                     cutoff=config.distance_cutoff, seed=config.seed,
                     anchor_sets=[list(s) for s in header["anchor_sets"]])
    else:
        model = GCN(g, encoder.dim, hidden=config.hidden,
                    n_layers=config.n_layers, seed=config.seed)
    blob = np.frombuffer(blob_path.read_bytes(), dtype="<f8")
    offset = 0
    for spec in header["params"]:
        shape = tuple(spec["shape"])
        size = int(np.prod(shape)) if shape else 1
        model.params[spec["name"]] = blob[offset:offset + size].reshape(shape).copy()
        offset += size
    if offset != len(blob):
        raise SchemaMismatchError(
            f"blob size {len(blob)} does not match declared shapes ({offset})"
        )
    emb = model.forward(encoder.transform(g))
    metrics = MetricsReport(**header["metrics"])
    return TrainedModel(kind=kind, model=model, encoder=encoder, graph=g,
                        embeddings=emb, config=config, metrics=metrics)
