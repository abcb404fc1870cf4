"""HTTP service backing the steward review UI.

State is an append-only JSON-lines event log plus an in-memory view rebuilt
by replaying the log, so every decision and threshold change keeps its
lineage and survives restarts. Mutations are serialized by a single lock and
acknowledged only after the event is written to disk.
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import __version__
from .errors import ArtifactMissingError
from .explain import build_text_index, explain_link
from .graphsheet import RunRecord, render_graphsheet, collect_facts
from .linkpred import MetricsReport, TrainConfig, load_model, watchlist_predict

PENDING = "Pending"
ACCEPTED = "Accepted"
REJECTED = "Rejected"


class ReviewStore:
    """Append-only event log with a replayed current-state view."""

    def __init__(self, log_path: str | Path):
        self.log_path = Path(log_path)
        self.lock = threading.Lock()
        self.predictions: dict[str, dict] = {}
        self.thresholds: dict = {"autolink": 24.0, "review": 12.0}
        self.enqueued_pairs: set[tuple[int, int]] = set()
        if self.log_path.exists():
            with self.log_path.open(encoding="utf-8") as f:
                for line in f:
                    if line.strip():
                        self._apply(json.loads(line))

    def _apply(self, event: dict) -> None:
        kind = event["type"]
        if kind == "prediction":
            rec = event["record"]
            self.predictions[rec["id"]] = rec
            self.enqueued_pairs.add((rec["source"], rec["target"]))
        elif kind == "feedback":
            rec = self.predictions[event["prediction_id"]]
            rec["status"] = event["status"]
            rec["note"] = event.get("note", "")
            rec["steward_id"] = event.get("steward_id", "")
            rec["decided_ts"] = event["ts"]
        elif kind == "thresholds":
            self.thresholds = {"autolink": event["autolink"],
                               "review": event["review"]}

    def append(self, event: dict) -> None:
        """Write the event durably, then apply it to the view."""
        with self.lock:
            self.log_path.parent.mkdir(parents=True, exist_ok=True)
            with self.log_path.open("a", encoding="utf-8") as f:
                f.write(json.dumps(event, sort_keys=True) + "\n")
                f.flush()
            self._apply(event)


class FeedbackBody(BaseModel):
    decision: str = Field(pattern="^(accept|reject)$")
    note: str = ""


class WatchlistBody(BaseModel):
    node_ids: list[int]
    top_k: int = 50


class ThresholdsBody(BaseModel):
    autolink: float
    review: float


def _load_match_scores(path: Path) -> list[dict]:
    scores = []
    if path.exists():
        with path.open(encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    scores.append(json.loads(line))
    return scores


def create_app(model_dir: str | Path, log_path: str | Path,
               corpus_path: str | Path | None = None,
               match_scores_path: str | Path | None = None,
               graphsheet_record: dict | None = None,
               ui_dir: str | Path | None = None) -> FastAPI:
    model_dir = Path(model_dir)
    if not (model_dir / "model.json").exists():
        raise ArtifactMissingError(f"no model in {model_dir}")
    trained = load_model(model_dir)
    g = trained.graph
    store = ReviewStore(log_path)

    index = None
    if corpus_path and Path(corpus_path).exists():
        docs = {}
        with Path(corpus_path).open(encoding="utf-8") as f:
            for line in f:
                if "\t" in line:
                    rid, text = line.rstrip("\n").split("\t", 1)
                    docs[rid] = text
        index = build_text_index(docs)

    match_scores = (_load_match_scores(Path(match_scores_path))
                    if match_scores_path else [])

    if graphsheet_record is None:
        record = collect_facts(
            g, trained.config, trained.kind, trained.metrics,
            anonymized=False, dataset_id=model_dir.name,
        ).to_dict()
    else:
        record = graphsheet_record

    app = FastAPI(title="mdmlink steward service", version=__version__)

    def get_record(prediction_id: str) -> dict:
        rec = store.predictions.get(prediction_id)
        if rec is None:
            raise HTTPException(404, f"unknown prediction {prediction_id}")
        return rec

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.get("/predictions")
    def list_predictions(status: str | None = None,
                         limit: int = Query(50, ge=1, le=500),
                         offset: int = Query(0, ge=0)):
        records = list(store.predictions.values())
        if status:
            records = [r for r in records
                       if r["status"].lower() == status.lower()]
        records.sort(key=lambda r: (-r["probability"], r["id"]))
        return {"total": len(records),
                "predictions": records[offset:offset + limit]}

    @app.get("/predictions/{prediction_id}")
    def get_prediction(prediction_id: str):
        return get_record(prediction_id)

    @app.get("/predictions/{prediction_id}/explanation")
    def get_explanation(prediction_id: str):
        rec = get_record(prediction_id)
        bundle = explain_link(g, index, rec["source"], rec["target"],
                              score=rec["probability"])
        return bundle.to_dict()

    @app.post("/predictions/{prediction_id}/feedback")
    def post_feedback(prediction_id: str, body: FeedbackBody,
                      request: Request):
        rec = get_record(prediction_id)
        if rec["status"] != PENDING:
            raise HTTPException(
                409, f"prediction already decided: {rec['status']}")
        store.append({
            "type": "feedback",
            "prediction_id": prediction_id,
            "status": ACCEPTED if body.decision == "accept" else REJECTED,
            "note": body.note,
            "steward_id": request.headers.get("X-Steward-Id", "anonymous"),
            "ts": time.time(),
        })
        return store.predictions[prediction_id]

    @app.post("/watchlist")
    def post_watchlist(body: WatchlistBody):
        if not body.node_ids:
            raise HTTPException(400, "watchlist must not be empty")
        bad = [i for i in body.node_ids if not 0 <= i < g.n_nodes]
        if bad:
            raise HTTPException(400, f"unknown node ids: {bad}")
        ranked = watchlist_predict(trained, body.node_ids, top_k=body.top_k)
        enqueued = []
        for r in ranked:
            pair = (r["source"], r["target"])
            if pair in store.enqueued_pairs:
                continue
            rec = {
                "id": f"p{r['source']:06d}-{r['target']:06d}",
                "source": r["source"],
                "target": r["target"],
                "probability": r["probability"],
                "status": PENDING,
                "note": "",
                "steward_id": "",
                "created_ts": time.time(),
                "decided_ts": None,
            }
            store.append({"type": "prediction", "record": rec})
            enqueued.append(rec["id"])
        return {"enqueued": enqueued, "skipped": len(ranked) - len(enqueued)}

    @app.get("/thresholds")
    def get_thresholds():
        return _threshold_view()

    @app.put("/thresholds")
    def put_thresholds(body: ThresholdsBody, request: Request):
        if body.review > body.autolink:
            raise HTTPException(400, "review must not exceed autolink")
        store.append({
            "type": "thresholds",
            "autolink": body.autolink,
            "review": body.review,
            "steward_id": request.headers.get("X-Steward-Id", "anonymous"),
            "ts": time.time(),
        })
        return _threshold_view()

    def _threshold_view() -> dict:
        autolink = store.thresholds["autolink"]
        review = store.thresholds["review"]
        n_link = sum(1 for s in match_scores if s["total"] >= autolink)
        n_review = sum(1 for s in match_scores
                       if review <= s["total"] < autolink)
        return {"autolink": autolink, "review": review,
                "counts": {"link": n_link, "review": n_review,
                           "nolink": len(match_scores) - n_link - n_review}}

    @app.get("/graphsheet")
    def get_graphsheet(format: str = "json"):
        if format == "json":
            return RunRecord.from_dict(record).to_dict()
        if format in ("md", "markdown"):
            from fastapi.responses import PlainTextResponse
            return PlainTextResponse(
                render_graphsheet(RunRecord.from_dict(record), "markdown"))
        raise HTTPException(400, f"unknown format {format!r}")

    @app.get("/nodes/{node_id}")
    def get_node(node_id: int):
        if not 0 <= node_id < g.n_nodes:
            raise HTTPException(404, f"unknown node {node_id}")
        node = g.nodes[node_id]
        return {"id": node.id, "kind": node.kind,
                "attributes": node.attributes,
                "degree": g.degree(node_id),
                "neighbors": g.neighbors(node_id)}

    if ui_dir and Path(ui_dir).exists():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True),
                  name="ui")

    return app
