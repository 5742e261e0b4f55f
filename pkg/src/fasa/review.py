"""Human review loop: serve verify-queue items over HTTP, log decisions, and
merge them back into the manifest."""

import json
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .emit import MANIFEST_NAME, clip_name, load_manifest, write_manifest
from .errors import FasaError
from .model import AlignmentRecord, Status
from .textnorm import normalize_text

DECISION_LOG_NAME = "decisions.jsonl"
ACTIONS = ("accept_gt", "accept_pred", "custom", "reject")


@dataclass(frozen=True)
class ReviewDecision:
    record_id: str
    action: str
    custom_text: Optional[str] = None
    reviewer: Optional[str] = None
    timestamp: float = 0.0

    def __post_init__(self):
        if self.action not in ACTIONS:
            raise FasaError("unknown review action %r" % self.action)
        if self.action == "custom" and not (self.custom_text or "").strip():
            raise FasaError("custom decisions need non-empty custom_text")

    def to_dict(self):
        d = {"id": self.record_id, "action": self.action, "timestamp": self.timestamp}
        if self.custom_text is not None:
            d["custom_text"] = self.custom_text
        if self.reviewer is not None:
            d["reviewer"] = self.reviewer
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(
            record_id=str(d["id"]),
            action=d["action"],
            custom_text=d.get("custom_text"),
            reviewer=d.get("reviewer"),
            timestamp=d.get("timestamp", 0.0),
        )


def load_decisions(path):
    decisions = []
    path = Path(path)
    if not path.exists():
        return decisions
    with open(path, encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line:
                decisions.append(ReviewDecision.from_dict(json.loads(line)))
    return decisions


def merge_decisions(manifest, decisions):
    """Apply reviewer decisions to a manifest; last decision per record wins.
    Returns a new manifest; untouched records pass through unchanged."""
    last = {}
    known = {r.segment_id for r in manifest.records}
    for d in decisions:
        if d.record_id not in known:
            raise FasaError("decision references unknown record %r" % d.record_id)
        last[d.record_id] = d
    merged = type(manifest)(audio_id=manifest.audio_id)
    for rec, span in zip(manifest.records, manifest.spans):
        d = last.get(rec.segment_id)
        if d is not None and rec.status is Status.VERIFY:
            if d.action == "accept_gt":
                rec = _promote(rec, rec.gt_text)
            elif d.action == "accept_pred":
                rec = _promote(rec, rec.pred_text)
            elif d.action == "custom":
                rec = _promote(rec, tuple(normalize_text(d.custom_text)))
            elif d.action == "reject":
                rec = AlignmentRecord(
                    segment_id=rec.segment_id,
                    status=Status.DROPPED,
                    pred_text=rec.pred_text,
                    window_start=rec.window_start,
                    window_len=rec.window_len,
                    gt_text=rec.gt_text,
                    distance=rec.distance,
                    wer=rec.wer,
                )
        merged.records.append(rec)
        merged.spans.append(span)
    return merged


def _promote(rec, gt_text):
    return AlignmentRecord(
        segment_id=rec.segment_id,
        status=Status.ALIGNED,
        pred_text=rec.pred_text,
        window_start=rec.window_start,
        window_len=rec.window_len,
        gt_text=tuple(gt_text),
        distance=rec.distance,
        wer=rec.wer,
    )


def create_app(dataset_dir):
    """FastAPI app serving the verify queue of a dataset directory."""
    from fastapi import FastAPI, HTTPException
    from fastapi.responses import FileResponse, HTMLResponse, Response
    from pydantic import BaseModel

    dataset_dir = Path(dataset_dir)
    manifest_path = dataset_dir / MANIFEST_NAME
    if not manifest_path.exists():
        raise FasaError("no manifest in %s" % dataset_dir)
    manifest, speaker = load_manifest(manifest_path)
    log_path = dataset_dir / DECISION_LOG_NAME
    log_lock = threading.Lock()

    verify_items = []
    for i, (rec, (start, end)) in enumerate(zip(manifest.records, manifest.spans)):
        if rec.status is Status.VERIFY:
            verify_items.append(
                {
                    "id": rec.segment_id,
                    "gt_text": " ".join(rec.gt_text),
                    "pred_text": " ".join(rec.pred_text),
                    "wer": rec.wer,
                    "duration_s": end - start,
                    "_clip": dataset_dir / "_verify" / (clip_name(speaker, i) + ".wav"),
                }
            )
    clips = {item["id"]: item.pop("_clip") for item in verify_items}

    class DecisionBody(BaseModel):
        id: str
        action: str
        custom_text: Optional[str] = None
        reviewer: Optional[str] = None

    app = FastAPI(title="fasa review")

    @app.get("/api/items")
    def items():
        return verify_items

    @app.get("/api/audio/{item_id}")
    def audio(item_id: str):
        clip = clips.get(item_id)
        if clip is None or not clip.exists():
            raise HTTPException(status_code=404, detail="no clip for %s" % item_id)
        return FileResponse(clip, media_type="audio/wav")

    @app.post("/api/decision")
    def decision(body: DecisionBody):
        if body.id not in clips and body.id not in {i["id"] for i in verify_items}:
            raise HTTPException(status_code=404, detail="unknown record %s" % body.id)
        try:
            d = ReviewDecision(
                record_id=body.id,
                action=body.action,
                custom_text=body.custom_text,
                reviewer=body.reviewer,
                timestamp=time.time(),
            )
        except FasaError as e:
            raise HTTPException(status_code=400, detail=str(e))
        with log_lock:
            with open(log_path, "a", encoding="utf-8") as f:
                f.write(json.dumps(d.to_dict()) + "\n")
                f.flush()
        return {"ok": True, "id": d.record_id, "action": d.action}

    static_dir = Path(__file__).parent / "static"

    @app.get("/")
    def index():
        page = static_dir / "index.html"
        if page.exists():
            return HTMLResponse(page.read_text(encoding="utf-8"))
        return HTMLResponse(
            "<html><body><h1>fasa review</h1>"
            "<p>UI assets not bundled; the API is available under /api/.</p>"
            "</body></html>"
        )

    @app.get("/static/{name}")
    def static_asset(name: str):
        path = static_dir / name
        if not path.exists() or not path.is_file():
            raise HTTPException(status_code=404, detail="no such asset")
        media = "text/css" if name.endswith(".css") else "application/javascript"
        return Response(path.read_bytes(), media_type=media)

    return app


def merge_dataset(dataset_dir):
    """CLI-level merge: apply the decision log to the on-disk manifest."""
    dataset_dir = Path(dataset_dir)
    manifest, speaker = load_manifest(dataset_dir / MANIFEST_NAME)
    decisions = load_decisions(dataset_dir / DECISION_LOG_NAME)
    merged = merge_decisions(manifest, decisions)
    write_manifest(merged, speaker, dataset_dir / MANIFEST_NAME)
    return merged
