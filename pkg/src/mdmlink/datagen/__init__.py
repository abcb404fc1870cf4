from .core import (
    GeneratorConfig,
    GroundTruth,
    SourceRecord,
    average_path_length,
    derive_duplicates,
    emit_sources,
    entity_graph,
    generate,
    generate_entities,
    generate_relationships,
    load_ground_truth,
    load_sources,
    parse_unstructured_line,
    render_unstructured,
    sample_duplicate_counts,
    zipf_pmf,
)
from . import tables

__all__ = [
    "GeneratorConfig",
    "GroundTruth",
    "SourceRecord",
    "average_path_length",
    "derive_duplicates",
    "emit_sources",
    "entity_graph",
    "generate",
    "generate_entities",
    "generate_relationships",
    "load_ground_truth",
    "load_sources",
    "parse_unstructured_line",
    "render_unstructured",
    "sample_duplicate_counts",
    "zipf_pmf",
    "tables",
]
