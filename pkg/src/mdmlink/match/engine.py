"""Probabilistic matching: frequency weights, bucketing, scoring, resolution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sklearn.base import BaseEstimator

from ..datagen.core import SEMI_STRUCTURED, STRUCTURED, UNSTRUCTURED, SourceRecord
from ..errors import InvalidThresholdsError
from ..graph import Edge, Node, PropertyGraph, UnionFind, build_graph
from .standardize import (
    MATCH_ATTRIBUTES,
    NAME_ATTRS,
    StandardizedRecord,
    edit_distance,
    soundex,
    standardize,
)

LINK = "link"
CLERICAL_REVIEW = "clerical_review"
NO_LINK = "no_link"

SOURCE_PRECEDENCE = {STRUCTURED: 0, SEMI_STRUCTURED: 1, UNSTRUCTURED: 2}


@dataclass
class WeightTable:
    """Per-value agreement weights plus per-attribute disagreement weight."""

    agreement: dict[str, dict[str, float]]
    default_agreement: dict[str, float]
    disagreement: float = -4.0
    w_max: float = 15.0

    def weight(self, attr: str, value: str) -> float:
        table = self.agreement.get(attr, {})
        return table.get(value, self.default_agreement.get(attr, self.w_max))


@dataclass
class MatchScore:
    pair: tuple[str, str]
    contributions: dict[str, float]
    total: float


@dataclass
class Thresholds:
    autolink: float
    review: float

    def __post_init__(self):
        if self.review > self.autolink:
            raise InvalidThresholdsError(
                f"review ({self.review}) must be <= autolink ({self.autolink})"
            )


@dataclass
class MatchDecision:
    outcome: str
    score: MatchScore


def compute_weights(
    records: list[StandardizedRecord], w_max: float = 15.0, disagreement: float = -4.0
) -> WeightTable:
    """Log-inverse-frequency agreement weights over the standardized corpus."""
    counts: dict[str, dict[str, int]] = {}
    totals: dict[str, int] = {}
    for rec in records:
        for attr, value in rec.values.items():
            if attr not in MATCH_ATTRIBUTES:
                continue
            counts.setdefault(attr, {})[value] = counts.get(attr, {}).get(value, 0) + 1
            totals[attr] = totals.get(attr, 0) + 1
    agreement: dict[str, dict[str, float]] = {}
    default_agreement: dict[str, float] = {}
    for attr, table in counts.items():
        total = totals[attr]
        agreement[attr] = {
            v: min(max(math.log2(total / c), 0.0), w_max) for v, c in table.items()
        }
        # unseen values are at most as common as a singleton
        default_agreement[attr] = min(math.log2(max(total, 1)), w_max)
    return WeightTable(agreement, default_agreement, disagreement, w_max)


def _near(attr: str, a: StandardizedRecord, b: StandardizedRecord) -> bool:
    va, vb = a.values[attr], b.values[attr]
    if edit_distance(va, vb, limit=1) <= 1:
        return True
    if attr in NAME_ATTRS and a.phonetic.get(attr) and a.phonetic.get(attr) == b.phonetic.get(attr):
        return True
    if attr == "given_name" and a.canonical.get(attr) == b.canonical.get(attr):
        return True
    return False


def compare(
    a: StandardizedRecord,
    b: StandardizedRecord,
    w: WeightTable,
    near_credit: float = 0.7,
) -> MatchScore:
    """Symmetric per-attribute weighted comparison."""
    contributions: dict[str, float] = {}
    for attr in MATCH_ATTRIBUTES:
        in_a, in_b = attr in a.values, attr in b.values
        if not (in_a and in_b):
            continue
        va, vb = a.values[attr], b.values[attr]
        if va == vb:
            contributions[attr] = w.weight(attr, va)
        elif _near(attr, a, b):
            contributions[attr] = near_credit * max(w.weight(attr, va), w.weight(attr, vb))
        else:
            contributions[attr] = w.disagreement
    pair = (a.record_id, b.record_id) if a.record_id <= b.record_id else (b.record_id, a.record_id)
    return MatchScore(pair, contributions, sum(contributions.values()))


def default_bucket_recipes() -> dict[str, callable]:
    """Bucket key derivations; a record joins one bucket per applicable recipe."""

    def name_dob(rec: StandardizedRecord) -> str | None:
        last = rec.phonetic.get("last_name")
        dob = rec.values.get("dob")
        if last and dob and len(dob) >= 4:
            return f"{last}|{dob[:4]}"
        return None

    def given_city(rec: StandardizedRecord) -> str | None:
        given = rec.canonical.get("given_name") or rec.values.get("given_name")
        city = rec.values.get("city")
        if given and city:
            return f"{soundex(given)}|{city}"
        return None

    def phone(rec: StandardizedRecord) -> str | None:
        return rec.values.get("phone")

    def national_id(rec: StandardizedRecord) -> str | None:
        return rec.values.get("national_id")

    return {
        "name_dob": name_dob,
        "given_city": given_city,
        "phone": phone,
        "national_id": national_id,
    }


def bucket(
    records: list[StandardizedRecord], recipes: dict[str, callable] | None = None
) -> dict[str, set[str]]:
    """Map bucket hash -> record-id set; keys are namespaced by recipe."""
    recipes = recipes or default_bucket_recipes()
    buckets: dict[str, set[str]] = {}
    for rec in records:
        for name, fn in recipes.items():
            key = fn(rec)
            if key is not None:
                buckets.setdefault(f"{name}:{key}", set()).add(rec.record_id)
    return buckets


def candidate_pairs(buckets: dict[str, set[str]]) -> set[tuple[str, str]]:
    pairs: set[tuple[str, str]] = set()
    for members in buckets.values():
        if len(members) < 2:
            continue
        ordered = sorted(members)
        for i in range(len(ordered)):
            for j in range(i + 1, len(ordered)):
                pairs.add((ordered[i], ordered[j]))
    return pairs


def decide(score: MatchScore, thresholds: Thresholds) -> MatchDecision:
    if score.total >= thresholds.autolink:
        return MatchDecision(LINK, score)
    if score.total >= thresholds.review:
        return MatchDecision(CLERICAL_REVIEW, score)
    return MatchDecision(NO_LINK, score)


@dataclass
class Resolution:
    clusters: list[set[str]]  # record-id sets, one per resolved entity
    record_to_cluster: dict[str, int]
    graph: PropertyGraph
    review_pairs: list[MatchScore]
    link_pairs: list[MatchScore]


class MatchEngine(BaseEstimator):
    """Fit a weight table on a record corpus, then score/resolve pairs.

    sklearn-style: ``fit`` learns corpus statistics, ``decide_pair`` /
    ``resolve`` consume them. Thresholds were calibrated once on the seeded
    demo fixture and frozen here.
    """

    def __init__(
        self,
        autolink: float = 24.0,
        review: float = 12.0,
        near_credit: float = 0.7,
        w_max: float = 15.0,
        disagreement: float = -4.0,
    ):
        self.autolink = autolink
        self.review = review
        self.near_credit = near_credit
        self.w_max = w_max
        self.disagreement = disagreement

    @property
    def thresholds(self) -> Thresholds:
        return Thresholds(self.autolink, self.review)

    def fit(self, records: list[SourceRecord], y=None) -> "MatchEngine":
        if not records:
            raise ValueError("record corpus must be non-empty")
        self.standardized_ = [standardize(r) for r in records]
        self.by_id_ = {r.record_id: r for r in self.standardized_}
        self.sources_ = {r.record_id: r.source for r in records}
        self.weights_ = compute_weights(self.standardized_, self.w_max, self.disagreement)
        self.buckets_ = bucket(self.standardized_)
        return self

    def score_pair(self, a: str, b: str) -> MatchScore:
        return compare(self.by_id_[a], self.by_id_[b], self.weights_, self.near_credit)

    def decide_pair(self, a: str, b: str) -> MatchDecision:
        return decide(self.score_pair(a, b), self.thresholds)

    def predict(self, pairs: list[tuple[str, str]]) -> list[str]:
        """Outcome label per candidate pair."""
        return [self.decide_pair(a, b).outcome for a, b in pairs]

    def resolve(
        self,
        stated_relationships: list[tuple[int, int, str]] | None = None,
        record_to_entity: dict[str, int] | None = None,
    ) -> Resolution:
        """Union Link decisions into entities and emit the resolved graph.

        Stated relationships are given at source-entity level; they are
        lifted onto resolved entities through any record of each endpoint.
        """
        pairs = sorted(candidate_pairs(self.buckets_))
        ids = sorted(self.by_id_)
        index = {rid: i for i, rid in enumerate(ids)}
        uf = UnionFind(len(ids))
        review_pairs: list[MatchScore] = []
        link_pairs: list[MatchScore] = []
        for a, b in pairs:
            d = self.decide_pair(a, b)
            if d.outcome == LINK:
                uf.union(index[a], index[b])
                link_pairs.append(d.score)
            elif d.outcome == CLERICAL_REVIEW:
                review_pairs.append(d.score)

        groups: dict[int, set[str]] = {}
        for rid in ids:
            groups.setdefault(uf.find(index[rid]), set()).add(rid)
        clusters = sorted(groups.values(), key=lambda s: min(s))
        record_to_cluster = {rid: ci for ci, cl in enumerate(clusters) for rid in cl}

        nodes = []
        for ci, cl in enumerate(clusters):
            merged: dict[str, str] = {}
            for rid in sorted(cl, key=lambda r: (SOURCE_PRECEDENCE[self.sources_[r]], r)):
                for attr, value in self.by_id_[rid].values.items():
                    merged.setdefault(attr, value)
            merged["record_ids"] = ",".join(sorted(cl))
            nodes.append(Node(ci, attributes=merged))

        edges: list[Edge] = []
        if stated_relationships and record_to_entity:
            entity_to_cluster: dict[int, int] = {}
            for rid, eid in record_to_entity.items():
                if rid in record_to_cluster:
                    entity_to_cluster.setdefault(eid, record_to_cluster[rid])
            seen = set()
            for a, b, rel in stated_relationships:
                ca, cb = entity_to_cluster.get(a), entity_to_cluster.get(b)
                if ca is None or cb is None or ca == cb:
                    continue
                key = (min(ca, cb), max(ca, cb), rel)
                if key in seen:
                    continue
                seen.add(key)
                edges.append(Edge(key[0], key[1], rel))

        graph = build_graph(nodes, edges)
        return Resolution(clusters, record_to_cluster, graph, review_pairs, link_pairs)


def pairwise_f1(
    record_to_cluster: dict[str, int], record_to_entity: dict[str, int]
) -> tuple[float, float, float]:
    """Precision/recall/F1 over same-cluster record pairs vs ground truth."""
    def pair_set(mapping: dict[str, int]) -> set[tuple[str, str]]:
        groups: dict[int, list[str]] = {}
        for rid, gid in mapping.items():
            groups.setdefault(gid, []).append(rid)
        pairs = set()
        for members in groups.values():
            members.sort()
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    pairs.add((members[i], members[j]))
        return pairs

    predicted = pair_set(record_to_cluster)
    truth = pair_set({r: e for r, e in record_to_entity.items() if r in record_to_cluster})
    if not predicted and not truth:
        return 1.0, 1.0, 1.0
    tp = len(predicted & truth)
    precision = tp / len(predicted) if predicted else 1.0
    recall = tp / len(truth) if truth else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1
