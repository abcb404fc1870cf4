"""Command-line entry point: one binary for the whole pipeline."""

from __future__ import annotations

import json
import os
from pathlib import Path

import click

from . import __version__
from .anonymize import anonymize_graph, anonymize_records
from .datagen import GeneratorConfig, generate, load_ground_truth, load_sources
from .explain import build_text_index, explain_link
from .graph import filter_components, load_graph, save_graph
from .graphsheet import RunRecord, collect_facts, render_graphsheet
from .linkpred import (
    TrainConfig,
    load_model,
    save_model,
    train,
    watchlist_predict,
)
from .match import MatchEngine, Thresholds, pairwise_f1


def _parse_thresholds(text: str) -> tuple[float, float]:
    """Parse 'AUTOLINK:REVIEW', e.g. '20:11'."""
    try:
        autolink, review = (float(p) for p in text.split(":"))
    except ValueError:
        raise click.BadParameter("expected AUTOLINK:REVIEW, e.g. 20:11")
    return autolink, review


@click.group()
@click.version_option(__version__)
def main():
    """Master-data link prediction toolkit."""


@main.command()
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--seed", default=42, show_default=True)
@click.option("--entities", default=1000, show_default=True)
@click.option("--typo-rate", default=0.1, show_default=True)
@click.option("--edge-ratio", default=5.0, show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True),
              help="TOML/JSON generator config; CLI flags override.")
def datagen(out_dir, seed, entities, typo_rate, edge_ratio, config_path):
    """Generate a synthetic multi-source person dataset."""
    if config_path:
        cfg = GeneratorConfig.from_file(config_path)
    else:
        cfg = GeneratorConfig()
    cfg.seed = seed
    cfg.n_entities = entities
    cfg.typo_rate = typo_rate
    cfg.edge_to_node_ratio = edge_ratio
    g = generate(cfg, out_dir)
    click.echo(f"wrote {out_dir}: {g.n_nodes} entities, {g.n_edges} "
               f"relationships")


@main.command()
@click.option("--sources", "src_dir", required=True,
              type=click.Path(exists=True))
@click.option("--thresholds", default="24:12", show_default=True,
              help="AUTOLINK:REVIEW score cutoffs.")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--score-f1/--no-score-f1", default=True, show_default=True,
              help="Report pairwise F1 against ground truth if present.")
def resolve(src_dir, thresholds, out_dir, score_f1):
    """Match and merge source records into resolved entities."""
    autolink, review = _parse_thresholds(thresholds)
    records = load_sources(src_dir)
    engine = MatchEngine(autolink=autolink, review=review)
    engine.fit(records)
    truth = None
    if os.path.exists(os.path.join(src_dir, "ground_truth.jsonl")):
        truth = load_ground_truth(src_dir)
    resolution = engine.resolve(
        stated_relationships=truth.relationships if truth else None,
        record_to_entity=truth.record_to_entity if truth else None,
    )
    os.makedirs(out_dir, exist_ok=True)
    save_graph(resolution.graph, os.path.join(out_dir, "resolved_graph"))
    with open(os.path.join(out_dir, "clusters.json"), "w") as f:
        json.dump([sorted(c) for c in resolution.clusters], f, indent=2)
    from .match import candidate_pairs

    with open(os.path.join(out_dir, "scores.jsonl"), "w") as f:
        for a, b in sorted(candidate_pairs(engine.buckets_)):
            score = engine.score_pair(a, b)
            f.write(json.dumps({"pair": list(score.pair),
                                "total": score.total}) + "\n")
    click.echo(f"{len(records)} records -> {len(resolution.clusters)} "
               f"entities; {len(resolution.review_pairs)} pairs for review")
    if truth and score_f1:
        p, r, f1 = pairwise_f1(resolution.record_to_cluster,
                               truth.record_to_entity)
        click.echo(f"pairwise precision={p:.4f} recall={r:.4f} f1={f1:.4f}")


@main.command()
@click.option("--in", "in_dir", required=True, type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--seed", default=42, show_default=True)
@click.option("--keep-map", is_flag=True,
              help="Also write the original-to-pseudonym map.")
def anonymize(in_dir, out_dir, seed, keep_map):
    """Pseudonymize a graph directory (nodes.jsonl/edges.jsonl)."""
    g = load_graph(in_dir)
    out_graph, shift_map = anonymize_graph(g, seed=seed, keep_map=keep_map)
    os.makedirs(out_dir, exist_ok=True)
    save_graph(out_graph, out_dir)
    if keep_map:
        with open(os.path.join(out_dir, "shift_map.json"), "w") as f:
            f.write(shift_map.to_json())
    click.echo(f"anonymized {g.n_nodes} nodes -> {out_dir}")


@main.command(name="train")
@click.option("--graph", "graph_dir", required=True,
              type=click.Path(exists=True))
@click.option("--model", "model_kind", default="pgnn", show_default=True,
              type=click.Choice(["pgnn", "gcn"]))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--seed", default=42, show_default=True)
@click.option("--epochs", default=200, show_default=True)
@click.option("--seeds", "n_seeds", default=3, show_default=True,
              help="Number of training seeds to average metrics over.")
@click.option("--graphsheet/--no-graphsheet", "with_sheet", default=True,
              show_default=True)
def train_cmd(graph_dir, model_kind, out_dir, seed, epochs, n_seeds,
              with_sheet):
    """Train a link prediction model on a graph directory."""
    g = load_graph(graph_dir)
    fg, _ = filter_components(g, min_size=10)
    config = TrainConfig(seed=seed, epochs=epochs, n_seeds=n_seeds)
    trained, report = train(fg, config, model_kind)
    save_model(trained, out_dir)
    if with_sheet:
        record = collect_facts(fg, config, model_kind, report,
                               anonymized=False,
                               dataset_id=Path(graph_dir).name)
        with open(os.path.join(out_dir, "graphsheet.json"), "w") as f:
            f.write(render_graphsheet(record, "json"))
    click.echo(f"{model_kind} roc_auc={report.roc_auc:.4f}"
               f"±{report.roc_auc_std:.4f} -> {out_dir}")



@main.command()
@click.option("--model", "model_dir", required=True,
              type=click.Path(exists=True))
@click.option("--watchlist", "watchlist_path", required=True,
              type=click.Path(exists=True),
              help="Text file with one node id per line.")
@click.option("--top-k", default=50, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def predict(model_dir, watchlist_path, top_k, out_path):
    """Rank probable links from watchlist nodes to the rest of the graph."""
    trained = load_model(model_dir)
    ids = [int(line) for line in Path(watchlist_path).read_text().split()]
    ranked = watchlist_predict(trained, ids, top_k=top_k)
    with open(out_path, "w") as f:
        for r in ranked:
            f.write(json.dumps(r) + "\n")
    click.echo(f"wrote {len(ranked)} predictions to {out_path}")


@main.command(name="explain")
@click.option("--graph", "graph_dir", required=True,
              type=click.Path(exists=True))
@click.option("--pair", required=True, help="Node pair, e.g. 12,97.")
@click.option("--model", "model_dir", type=click.Path(exists=True))
@click.option("--corpus", "corpus_path", type=click.Path(exists=True),
              help="Unstructured source text (record_id TAB sentence).")
def explain_cmd(graph_dir, pair, model_dir, corpus_path):
    """Explain a predicted link: paths, text evidence, node comparison."""
    g = load_graph(graph_dir)
    try:
        u, v = (int(p) for p in pair.split(","))
    except ValueError:
        raise click.BadParameter("expected U,V node ids")
    score = 0.0
    if model_dir:
        trained = load_model(model_dir)
        from .linkpred import score_link
        score = score_link(trained.embeddings, u, v)
    index = None
    if corpus_path:
        docs = {}
        for line in Path(corpus_path).read_text().splitlines():
            if "\t" in line:
                rid, text = line.split("\t", 1)
                docs[rid] = text
        index = build_text_index(docs)
    bundle = explain_link(g, index, u, v, score=score)
    click.echo(json.dumps(bundle.to_dict(), indent=2))


@main.command(name="graphsheet")
@click.option("--run", "run_dir", required=True, type=click.Path(exists=True),
              help="Model output directory containing graphsheet.json.")
@click.option("--format", "fmt", default="md", show_default=True,
              type=click.Choice(["md", "json"]))
def graphsheet_cmd(run_dir, fmt):
    """Render the transparency sheet for a training run."""
    sheet_path = Path(run_dir) / "graphsheet.json"
    if not sheet_path.exists():
        raise click.ClickException(f"no graphsheet.json in {run_dir}")
    record = RunRecord.from_dict(json.loads(sheet_path.read_text()))
    click.echo(render_graphsheet(record, "json" if fmt == "json" else
                                 "markdown"))


@main.command()
@click.option("--model", "model_dir", required=True,
              type=click.Path(exists=True))
@click.option("--log", "log_path", default="reviews.jsonl",
              show_default=True)
@click.option("--corpus", "corpus_path", type=click.Path(exists=True))
@click.option("--scores", "scores_path", type=click.Path(exists=True),
              help="scores.jsonl from `mdm resolve` for threshold counts.")
@click.option("--ui-dir", type=click.Path(exists=True),
              help="Static frontend build to serve at /.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(model_dir, log_path, corpus_path, scores_path, ui_dir, host, port):
    """Serve the steward review HTTP API."""
    import uvicorn

    from .service import create_app

    app = create_app(model_dir, log_path, corpus_path=corpus_path,
                     match_scores_path=scores_path, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
