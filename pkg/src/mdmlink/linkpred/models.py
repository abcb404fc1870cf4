"""Dense GCN and position-aware (anchor-set) models with manual backprop.

Both models expose ``forward(X) -> embeddings`` and
``backward(d_embeddings) -> None`` (accumulating into ``grads``), so the
training loop and the finite-difference gradient checks treat them
uniformly. Parameters live in an ordered dict of float64 arrays.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ..errors import NonFiniteActivationError, ShapeMismatchError
from ..graph import PropertyGraph, bfs_distances
from ..rng import SplitMix64


def _glorot(rng: np.random.Generator, fan_in: int, fan_out: int) -> np.ndarray:
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=(fan_in, fan_out))


def normalized_adjacency(g: PropertyGraph) -> sp.csr_matrix:
    """Symmetric renormalized adjacency D^-1/2 (A + I) D^-1/2."""
    n = g.n_nodes
    rows, cols = [], []
    for e in g.edges:
        rows += [e.src, e.dst]
        cols += [e.dst, e.src]
    rows += list(range(n))
    cols += list(range(n))
    data = np.ones(len(rows))
    a = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
    a.data = np.minimum(a.data, 1.0)  # parallel relation edges count once
    deg = np.asarray(a.sum(axis=1)).ravel()
    d_inv_sqrt = 1.0 / np.sqrt(deg)
    d = sp.diags(d_inv_sqrt)
    return (d @ a @ d).tocsr()


def _check_finite(name: str, arr: np.ndarray) -> None:
    if not np.all(np.isfinite(arr)):
        raise NonFiniteActivationError(f"non-finite values in {name}")


class GCN:
    """L layers of H <- ReLU(A_hat H W + b); final layer linear."""

    def __init__(self, g: PropertyGraph, d_in: int, hidden: int = 32,
                 n_layers: int = 2, seed: int = 0):
        self.a_hat = normalized_adjacency(g)
        self.n_layers = n_layers
        rng = np.random.default_rng(seed)
        self.params: dict[str, np.ndarray] = {}
        dims = [d_in] + [hidden] * n_layers
        for l in range(n_layers):
            self.params[f"W{l}"] = _glorot(rng, dims[l], dims[l + 1])
            self.params[f"b{l}"] = np.zeros(dims[l + 1])
        self.grads: dict[str, np.ndarray] = {}
        self._cache: dict = {}

    @property
    def out_dim(self) -> int:
        return self.params[f"W{self.n_layers - 1}"].shape[1]

    def forward(self, x: np.ndarray) -> np.ndarray:
        if x.shape[1] != self.params["W0"].shape[0]:
            raise ShapeMismatchError(
                f"feature dim {x.shape[1]} != W0 rows {self.params['W0'].shape[0]}"
            )
        _check_finite("input features", x)
        h = x
        cache = {"inputs": [], "pre": []}
        for l in range(self.n_layers):
            ah = self.a_hat @ h
            cache["inputs"].append(ah)
            z = ah @ self.params[f"W{l}"] + self.params[f"b{l}"]
            cache["pre"].append(z)
            h = z if l == self.n_layers - 1 else np.maximum(z, 0.0)
            _check_finite(f"layer {l} activations", h)
        self._cache = cache
        return h

    def backward(self, d_emb: np.ndarray) -> None:
        self.grads = {}
        grad = d_emb
        for l in reversed(range(self.n_layers)):
            if l != self.n_layers - 1:
                grad = grad * (self._cache["pre"][l] > 0)
            ah = self._cache["inputs"][l]
            self.grads[f"W{l}"] = ah.T @ grad
            self.grads[f"b{l}"] = grad.sum(axis=0)
            if l > 0:
                grad = self.a_hat.T @ (grad @ self.params[f"W{l}"].T)


def make_anchor_sets(n_nodes: int, total_anchors: int = 64, seed: int = 0) -> list[list[int]]:
    """Random anchor sets with doubling sizes (1,1,2,2,4,4,...) spending the budget.

    The last set is truncated so the total anchor count is exact. Anchors may
    repeat across sets but are distinct within a set.
    """
    rng = SplitMix64(seed).fork("anchors")
    sizes = []
    size, used = 1, 0
    while used < total_anchors:
        for _ in range(2):
            take = min(size, total_anchors - used)
            if take <= 0:
                break
            sizes.append(take)
            used += take
        size *= 2
    sets = []
    population = list(range(n_nodes))
    for sz in sizes:
        sets.append(sorted(rng.sample(population, min(sz, n_nodes))))
    return sets


def anchor_proximity(
    g: PropertyGraph, anchor_sets: list[list[int]], cutoff: int = 6
) -> list[np.ndarray]:
    """Per set: (n x |S|) matrix of s(v,u) = 1/(d(v,u)+1), zero beyond cutoff."""
    n = g.n_nodes
    cache: dict[int, dict[int, int]] = {}
    for s in anchor_sets:
        for u in s:
            if u not in cache:
                cache[u] = bfs_distances(g, u, cutoff)
    mats = []
    for s in anchor_sets:
        m = np.zeros((n, len(s)))
        for j, u in enumerate(s):
            for v, d in cache[u].items():
                m[v, j] = 1.0 / (d + 1.0)
        mats.append(m)
    return mats


class PGNN:
    """Position-aware layers over anchor sets.

    Per layer and anchor set S_i, node v aggregates
    s(v,u) * concat(h_v, h_u) over u in S_i, passes the aggregate through a
    shared weight + ReLU, then an output projection reduces each set's vector
    to a scalar: the layer emits one coordinate per anchor set. Deeper layers
    consume the previous layer's coordinates through a tanh coupling (a
    one-sided coupling can zero every coordinate at once and kill training);
    the final projection is linear.
    """

    def __init__(self, g: PropertyGraph, d_in: int, hidden: int = 32,
                 n_layers: int = 2, total_anchors: int = 64,
                 cutoff: int = 6, seed: int = 0,
                 anchor_sets: list[list[int]] | None = None):
        self.anchor_sets = anchor_sets or make_anchor_sets(g.n_nodes, total_anchors, seed)
        self.prox = anchor_proximity(g, self.anchor_sets, cutoff)
        self.m_sets = len(self.anchor_sets)
        self.n_layers = n_layers
        rng = np.random.default_rng(seed)
        self.params: dict[str, np.ndarray] = {}
        d = d_in
        for l in range(n_layers):
            self.params[f"W{l}"] = _glorot(rng, 2 * d, hidden)
            self.params[f"b{l}"] = np.zeros(hidden)
            self.params[f"wout{l}"] = _glorot(rng, hidden, 1)[:, 0]
            self.params[f"bout{l}"] = np.zeros(1)
            d = self.m_sets
        self._cache: dict = {}
        self.grads: dict[str, np.ndarray] = {}

    @property
    def out_dim(self) -> int:
        return self.m_sets

    def forward(self, x: np.ndarray) -> np.ndarray:
        if 2 * x.shape[1] != self.params["W0"].shape[0]:
            raise ShapeMismatchError(
                f"feature dim {x.shape[1]} incompatible with W0 {self.params['W0'].shape}"
            )
        _check_finite("input features", x)
        h = x
        cache = []
        for l in range(self.n_layers):
            layer = {"h": h, "agg": [], "pre": [], "msg": []}
            w, b = self.params[f"W{l}"], self.params[f"b{l}"]
            wout, bout = self.params[f"wout{l}"], self.params[f"bout{l}"]
            coords = np.zeros((h.shape[0], self.m_sets))
            for i, s in enumerate(self.anchor_sets):
                prox = self.prox[i]  # n x |S_i|
                c = prox.sum(axis=1, keepdims=True)  # n x 1
                g_i = prox @ h[self.anchor_sets[i], :]  # n x d
                agg = np.concatenate([c * h, g_i], axis=1)  # n x 2d
                pre = agg @ w + b
                msg = np.maximum(pre, 0.0)
                coords[:, i] = msg @ wout + bout[0]
                layer["agg"].append(agg)
                layer["pre"].append(pre)
                layer["msg"].append(msg)
            _check_finite(f"layer {l} coordinates", coords)
            cache.append(layer)
            h = coords if l == self.n_layers - 1 else np.tanh(coords)
            cache[-1]["coords"] = coords
        self._cache = cache
        return h

    def backward(self, d_emb: np.ndarray) -> None:
        self.grads = {k: np.zeros_like(v) for k, v in self.params.items()}
        d_coords = d_emb
        for l in reversed(range(self.n_layers)):
            layer = self._cache[l]
            if l != self.n_layers - 1:
                d_coords = d_coords * (1.0 - np.tanh(layer["coords"]) ** 2)
            w = self.params[f"W{l}"]
            wout = self.params[f"wout{l}"]
            h = layer["h"]
            d = h.shape[1]
            d_h = np.zeros_like(h)
            for i, s in enumerate(self.anchor_sets):
                dz = d_coords[:, i]  # n
                msg = layer["msg"][i]
                self.grads[f"wout{l}"] += msg.T @ dz
                self.grads[f"bout{l}"] += np.array([dz.sum()])
                d_msg = np.outer(dz, wout)
                d_pre = d_msg * (layer["pre"][i] > 0)
                self.grads[f"W{l}"] += layer["agg"][i].T @ d_pre
                self.grads[f"b{l}"] += d_pre.sum(axis=0)
                d_agg = d_pre @ w.T  # n x 2d
                prox = self.prox[i]
                c = prox.sum(axis=1, keepdims=True)
                d_h += c * d_agg[:, :d]
                d_h[s, :] += prox.T @ d_agg[:, d:]
            d_coords = d_h


def score_links(emb: np.ndarray, pairs: np.ndarray) -> np.ndarray:
    """sigmoid(dot(emb_u, emb_v)) per pair; symmetric in (u, v)."""
    dots = np.sum(emb[pairs[:, 0]] * emb[pairs[:, 1]], axis=1)
    return 1.0 / (1.0 + np.exp(-dots))


def score_link(emb: np.ndarray, u: int, v: int) -> float:
    return float(score_links(emb, np.array([[u, v]]))[0])
