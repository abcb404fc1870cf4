"""Train/test split, negative sampling, Adam training loop, watchlist scoring."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

import numpy as np

from ..errors import (
    ConfigError,
    DivergenceError,
    EmptyWatchlistError,
    ExhaustedCandidatesError,
    TooFewEdgesError,
    UnknownNodeError,
)
from ..graph import Edge, PropertyGraph, UnionFind, build_graph
from ..rng import SplitMix64
from .features import FeatureEncoder
from .metrics import MetricsReport, mdm_metrics, roc_auc
from .models import GCN, PGNN, score_links


@dataclass
class TrainConfig:
    positive_fraction: float = 0.10
    negative_ratio: float = 1.0
    batch_subgraphs: int = 8
    anchors: int = 64
    hidden: int = 32
    n_layers: int = 2
    epochs: int = 200
    learning_rate: float = 0.01
    seed: int = 42
    n_seeds: int = 3
    distance_cutoff: int = 6

    def validate(self) -> None:
        if not 0.0 < self.positive_fraction < 1.0:
            raise ConfigError("positive_fraction must be in (0, 1)")
        if self.batch_subgraphs < 1:
            raise ConfigError("batch_subgraphs must be >= 1")
        if self.epochs < 1 or self.learning_rate <= 0:
            raise ConfigError("epochs >= 1 and learning_rate > 0 required")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class LinkSplit:
    train_graph: PropertyGraph
    positives: list[tuple[int, int]]
    negatives: list[tuple[int, int]] = field(default_factory=list)


def split_links(g: PropertyGraph, positive_fraction: float = 0.10,
                seed: int = 42) -> LinkSplit:
    """Hold out ceil(fraction * |E|) edges as positive test pairs."""
    if not 0.0 < positive_fraction < 1.0:
        raise ConfigError("positive_fraction must be in (0, 1)")
    if g.n_edges < 10:
        raise TooFewEdgesError(f"need >= 10 edges, got {g.n_edges}")
    rng = SplitMix64(seed).fork("link-split")
    n_hold = int(np.ceil(positive_fraction * g.n_edges))
    order = list(range(g.n_edges))
    rng.shuffle(order)
    held = set(order[:n_hold])
    train_edges = [e for i, e in enumerate(g.edges) if i not in held]
    positives = [(g.edges[i].src, g.edges[i].dst) for i in sorted(held)]
    train_graph = build_graph(g.nodes, train_edges)
    return LinkSplit(train_graph=train_graph, positives=positives)


def sample_negatives(g: PropertyGraph, positives: list[tuple[int, int]],
                     seed: int = 42) -> list[tuple[int, int]]:
    """One unconnected pair per positive, sharing one of its endpoints.

    Unconnectedness is checked against the full graph so a held-out edge can
    never be drawn as a negative.
    """
    rng = SplitMix64(seed).fork("negatives")
    n = g.n_nodes
    negatives: list[tuple[int, int]] = []
    for u, v in positives:
        pair = None
        for endpoint in (u, v) if rng.random() < 0.5 else (v, u):
            neighbors = set(g.neighbors(endpoint))
            if len(neighbors) >= n - 1:
                continue
            for _ in range(200):
                other = rng.randint(0, n - 1)
                if other != endpoint and other not in neighbors:
                    pair = (endpoint, other)
                    break
            if pair is None:
                candidates = [w for w in range(n)
                              if w != endpoint and w not in neighbors]
                if candidates:
                    pair = (endpoint, rng.choice(candidates))
            if pair is not None:
                break
        if pair is None:
            raise ExhaustedCandidatesError(
                f"no unconnected partner for positive ({u}, {v})"
            )
        negatives.append(pair)
    return negatives


def _component_batches(g: PropertyGraph, pairs: np.ndarray,
                       batch_subgraphs: int,
                       rng: SplitMix64) -> list[np.ndarray]:
    """Group pair indices by connected component, then pack components in
    batches of ``batch_subgraphs``. Pairs bridging components follow their
    first endpoint."""
    uf = UnionFind(g.n_nodes)
    for e in g.edges:
        uf.union(e.src, e.dst)
    comp_pairs: dict[int, list[int]] = {}
    for i, (u, _v) in enumerate(pairs):
        comp_pairs.setdefault(uf.find(int(u)), []).append(i)
    comps = sorted(comp_pairs)
    rng.shuffle(comps)
    batches = []
    for start in range(0, len(comps), batch_subgraphs):
        idx: list[int] = []
        for c in comps[start:start + batch_subgraphs]:
            idx.extend(comp_pairs[c])
        batches.append(np.array(idx, dtype=int))
    return batches


class AdamOptimizer:
    def __init__(self, params: dict[str, np.ndarray], lr: float = 0.01,
                 beta1: float = 0.9, beta2: float = 0.999, eps: float = 1e-8):
        self.lr, self.beta1, self.beta2, self.eps = lr, beta1, beta2, eps
        self.m = {k: np.zeros_like(v) for k, v in params.items()}
        self.v = {k: np.zeros_like(v) for k, v in params.items()}
        self.t = 0

    def step(self, params: dict[str, np.ndarray],
             grads: dict[str, np.ndarray]) -> None:
        self.t += 1
        for k in sorted(params):
            g = grads[k]
            self.m[k] = self.beta1 * self.m[k] + (1 - self.beta1) * g
            self.v[k] = self.beta2 * self.v[k] + (1 - self.beta2) * g * g
            m_hat = self.m[k] / (1 - self.beta1 ** self.t)
            v_hat = self.v[k] / (1 - self.beta2 ** self.t)
            params[k] -= self.lr * m_hat / (np.sqrt(v_hat) + self.eps)


def bce_loss_and_grad(probs: np.ndarray, labels: np.ndarray) -> tuple[float, np.ndarray]:
    """Mean binary cross-entropy and its gradient w.r.t. the pre-sigmoid dots."""
    eps = 1e-12
    loss = -np.mean(labels * np.log(probs + eps)
                    + (1 - labels) * np.log(1 - probs + eps))
    d_dots = (probs - labels) / len(labels)
    return float(loss), d_dots


@dataclass
class TrainedModel:
    kind: str
    model: object
    encoder: FeatureEncoder
    graph: PropertyGraph
    embeddings: np.ndarray
    config: TrainConfig
    metrics: MetricsReport


def _build_model(kind: str, g: PropertyGraph, d_in: int,
                 config: TrainConfig, seed: int):
    if kind == "gcn":
        return GCN(g, d_in, hidden=config.hidden,
                   n_layers=config.n_layers, seed=seed)
    if kind == "pgnn":
        return PGNN(g, d_in, hidden=config.hidden, n_layers=config.n_layers,
                    total_anchors=config.anchors,
                    cutoff=config.distance_cutoff, seed=seed)
    raise ConfigError(f"unknown model kind {kind!r}; expected 'gcn' or 'pgnn'")


def train_once(g: PropertyGraph, config: TrainConfig, model_kind: str,
               seed: int) -> TrainedModel:
    """Single seed: split, sample negatives, optimize, evaluate held-out."""
    config.validate()
    split = split_links(g, config.positive_fraction, seed)
    test_neg = sample_negatives(g, split.positives, seed)
    split.negatives = test_neg
    tg = split.train_graph

    encoder = FeatureEncoder().fit(tg)
    x = encoder.transform(tg)
    model = _build_model(model_kind, tg, encoder.dim, config, seed)

    # training pairs: observed train edges vs fresh unconnected negatives
    train_pos = [(e.src, e.dst) for e in tg.edges]
    train_neg = sample_negatives(g, train_pos, seed + 1)
    pairs = np.array(train_pos + train_neg, dtype=int)
    labels = np.concatenate([np.ones(len(train_pos)), np.zeros(len(train_neg))])

    rng = SplitMix64(seed).fork("batches")
    opt = AdamOptimizer(model.params, lr=config.learning_rate)
    for _epoch in range(config.epochs):
        for idx in _component_batches(tg, pairs, config.batch_subgraphs, rng):
            emb = model.forward(x)
            batch_pairs = pairs[idx]
            probs = score_links(emb, batch_pairs)
            loss, d_dots = bce_loss_and_grad(probs, labels[idx])
            if not np.isfinite(loss):
                raise DivergenceError(f"loss became non-finite at step {opt.t}")
            d_emb = np.zeros_like(emb)
            np.add.at(d_emb, batch_pairs[:, 0],
                      d_dots[:, None] * emb[batch_pairs[:, 1]])
            np.add.at(d_emb, batch_pairs[:, 1],
                      d_dots[:, None] * emb[batch_pairs[:, 0]])
            model.backward(d_emb)
            opt.step(model.params, model.grads)

    emb = model.forward(x)
    scores_pos = score_links(emb, np.array(split.positives, dtype=int))
    scores_neg = score_links(emb, np.array(test_neg, dtype=int))
    metrics = mdm_metrics(scores_pos, scores_neg)
    return TrainedModel(kind=model_kind, model=model, encoder=encoder,
                        graph=tg, embeddings=emb, config=config,
                        metrics=metrics)


def train(g: PropertyGraph, config: TrainConfig,
          model_kind: str) -> tuple[TrainedModel, MetricsReport]:
    """Train over config.n_seeds seeds; report mean metrics with std-dev.

    Returns the model trained on the first seed together with the
    seed-averaged report.
    """
    config.validate()
    runs = [train_once(g, config, model_kind, config.seed + i)
            for i in range(config.n_seeds)]
    aucs = np.array([r.metrics.roc_auc for r in runs])
    report = MetricsReport(
        roc_auc=float(aucs.mean()),
        accuracy=float(np.mean([r.metrics.accuracy for r in runs])),
        positive_sample_accuracy=float(
            np.mean([r.metrics.positive_sample_accuracy for r in runs])),
        positive_predictions_on_negatives=float(
            np.mean([r.metrics.positive_predictions_on_negatives for r in runs])),
        roc_auc_std=float(aucs.std()),
    )
    best = runs[0]
    best.metrics = report
    return best, report


def watchlist_predict(trained: TrainedModel, watchlist: list[int],
                      top_k: int = 50,
                      max_hops: int | None = None) -> list[dict]:
    """Rank non-neighbor candidates for each watchlist node by probability."""
    if not watchlist:
        raise EmptyWatchlistError("watchlist is empty")
    g = trained.graph
    wset = set(watchlist)
    for w in watchlist:
        if not 0 <= w < g.n_nodes:
            raise UnknownNodeError(f"watchlist node {w} not in graph")
    emb = trained.embeddings
    results = []
    for w in sorted(wset):
        neighbors = set(g.neighbors(w))
        if max_hops is not None:
            from ..graph import bfs_distances
            reach = bfs_distances(g, w, max_hops)
            candidates = [v for v in reach
                          if v != w and v not in neighbors and v not in wset]
        else:
            candidates = [v for v in range(g.n_nodes)
                          if v != w and v not in neighbors and v not in wset]
        if not candidates:
            continue
        pairs = np.array([[w, v] for v in candidates], dtype=int)
        probs = score_links(emb, pairs)
        for v, p in zip(candidates, probs):
            results.append({"source": w, "target": int(v),
                            "probability": float(p)})
    results.sort(key=lambda r: (-r["probability"], r["source"], r["target"]))
    return results[:top_k]
