from .standardize import (
    MATCH_ATTRIBUTES,
    StandardizedRecord,
    canonical_given_name,
    digits_only,
    edit_distance,
    normalize,
    soundex,
    standardize,
)
from .engine import (
    CLERICAL_REVIEW,
    LINK,
    NO_LINK,
    MatchDecision,
    MatchEngine,
    MatchScore,
    Resolution,
    Thresholds,
    WeightTable,
    bucket,
    candidate_pairs,
    compare,
    compute_weights,
    decide,
    default_bucket_recipes,
    pairwise_f1,
)

__all__ = [
    "MATCH_ATTRIBUTES",
    "StandardizedRecord",
    "canonical_given_name",
    "digits_only",
    "edit_distance",
    "normalize",
    "soundex",
    "standardize",
    "CLERICAL_REVIEW",
    "LINK",
    "NO_LINK",
    "MatchDecision",
    "MatchEngine",
    "MatchScore",
    "Resolution",
    "Thresholds",
    "WeightTable",
    "bucket",
    "candidate_pairs",
    "compare",
    "compute_weights",
    "decide",
    "default_bucket_recipes",
    "pairwise_f1",
]
