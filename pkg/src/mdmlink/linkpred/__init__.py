from .features import DEFAULT_FEATURE_ATTRS, FeatureEncoder
from .metrics import MetricsReport, mdm_metrics, roc_auc, roc_auc_bruteforce
from .models import (
    GCN,
    PGNN,
    anchor_proximity,
    make_anchor_sets,
    normalized_adjacency,
    score_link,
    score_links,
)
from .training import (
    AdamOptimizer,
    LinkSplit,
    TrainConfig,
    TrainedModel,
    bce_loss_and_grad,
    sample_negatives,
    split_links,
    train,
    train_once,
    watchlist_predict,
)
from .io import load_model, save_model

__all__ = [
    "DEFAULT_FEATURE_ATTRS",
    "FeatureEncoder",
    "MetricsReport",
    "mdm_metrics",
    "roc_auc",
    "roc_auc_bruteforce",
    "GCN",
    "PGNN",
    "anchor_proximity",
    "make_anchor_sets",
    "normalized_adjacency",
    "score_link",
    "score_links",
    "AdamOptimizer",
    "LinkSplit",
    "TrainConfig",
    "TrainedModel",
    "bce_loss_and_grad",
    "sample_negatives",
    "split_links",
    "train",
    "train_once",
    "watchlist_predict",
    "load_model",
    "save_model",
]
