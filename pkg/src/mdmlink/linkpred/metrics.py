"""Ranking and accuracy metrics for link prediction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import SingleClassError


def roc_auc(scores, labels) -> float:
    """Probability a random positive outranks a random negative, ties half.

    Computed from rank sums with midranks for ties; equals brute-force pair
    counting exactly.
    """
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels, dtype=int)
    n_pos = int(labels.sum())
    n_neg = len(labels) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClassError("both classes required for ROC AUC")
    order = np.argsort(scores, kind="mergesort")
    sorted_scores = scores[order]
    ranks = np.empty(len(scores), dtype=float)
    i = 0
    while i < len(scores):
        j = i
        while j + 1 < len(scores) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0  # midrank, 1-based
        i = j + 1
    rank_sum_pos = ranks[labels == 1].sum()
    return float((rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg))


def roc_auc_bruteforce(scores, labels) -> float:
    """O(P*N) pair-counting oracle."""
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels, dtype=int)
    pos = scores[labels == 1]
    neg = scores[labels == 0]
    if len(pos) == 0 or len(neg) == 0:
        raise SingleClassError("both classes required for ROC AUC")
    wins = 0.0
    for p in pos:
        wins += float(np.sum(p > neg)) + 0.5 * float(np.sum(p == neg))
    return wins / (len(pos) * len(neg))


@dataclass
class MetricsReport:
    roc_auc: float
    accuracy: float
    positive_sample_accuracy: float
    positive_predictions_on_negatives: float
    roc_auc_std: float = 0.0

    def to_dict(self) -> dict:
        return {
            "roc_auc": self.roc_auc,
            "accuracy": self.accuracy,
            "positive_sample_accuracy": self.positive_sample_accuracy,
            "positive_predictions_on_negatives": self.positive_predictions_on_negatives,
            "roc_auc_std": self.roc_auc_std,
        }


def mdm_metrics(scores_pos, scores_neg, threshold: float = 0.5) -> MetricsReport:
    """Held-out metrics including the incomplete-graph diagnostics.

    ``positive_sample_accuracy`` is the fraction of removed links recovered;
    ``positive_predictions_on_negatives`` is the fraction of negative pairs
    the model still predicts as links, which on an incomplete graph may be
    missing links rather than errors.
    """
    scores_pos = np.asarray(scores_pos, dtype=float)
    scores_neg = np.asarray(scores_neg, dtype=float)
    if len(scores_pos) == 0 or len(scores_neg) == 0:
        raise ValueError("both positive and negative scores required")
    pos_acc = float(np.mean(scores_pos >= threshold))
    pos_on_neg = float(np.mean(scores_neg >= threshold))
    scores = np.concatenate([scores_pos, scores_neg])
    labels = np.concatenate([np.ones(len(scores_pos)), np.zeros(len(scores_neg))])
    accuracy = float(
        np.mean((scores >= threshold).astype(int) == labels.astype(int))
    )
    return MetricsReport(
        roc_auc=roc_auc(scores, labels.astype(int)),
        accuracy=accuracy,
        positive_sample_accuracy=pos_acc,
        positive_predictions_on_negatives=pos_on_neg,
    )
