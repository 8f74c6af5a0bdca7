"""Expert-review queue over the curated ledger, and its HTTP surface.

Reviewers lease the oldest open item, then submit exactly one decision per
item version. Writes are compare-and-set on a per-item version counter:
every mutation (claim, decision, failed edit) bumps the version, so a
stale submission fails loudly with VersionConflict instead of blocking.
Approve sends the sample to the final ledger; Reject quarantines it with
the reviewer's note; Edit replaces the rationale, re-runs the automatic
gate, and only enters the final ledger on a pass. The service is the only
writer of the final ledger.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Mapping, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles

from .errors import (
    DomainError,
    InvalidDecision,
    Unauthorized,
    UnknownItem,
    VersionConflict,
)
from .evaluation import EvalConfig, evaluate
from .model import (
    Origin,
    Rationale,
    RawSample,
    ReviewAction,
    ReviewDecision,
)
from .store import EventLog, RunState, verdict_payload

DEFAULT_LEASE_SECONDS = 300.0


@dataclass
class QueueItem:
    raw: RawSample
    rationale_text: str
    revision: int
    version: int
    claimed_by: Optional[str] = None
    claimed_until: Optional[float] = None
    terminal: Optional[str] = None  # "d3" | "quarantined"
    last_verdict: Optional[dict] = None

    def snapshot(self, l_max: int) -> dict:
        return {
            "id": self.raw.id,
            "image_ref": self.raw.image_ref,
            "answer": self.raw.answer,
            "language": self.raw.language.value,
            "rationale": self.rationale_text,
            "revision": self.revision,
            "version": self.version,
            "l_max": l_max,
            "last_verdict": self.last_verdict,
            "decided": self.terminal,
        }


@dataclass
class DecisionOutcome:
    outcome: str  # "accepted" | "quarantined" | "evaluation_failed"
    version: int
    stage: Optional[str] = None
    verdict: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"outcome": self.outcome, "version": self.version}
        if self.stage:
            out["stage"] = self.stage
        if self.verdict is not None:
            out["verdict"] = self.verdict
        return out


class ReviewQueue:
    """In-process review queue backed by the run's event log."""

    def __init__(self, events: EventLog, state: RunState, eval_cfg: EvalConfig,
                 lease_seconds: float = DEFAULT_LEASE_SECONDS,
                 clock: Callable[[], float] = time.time):
        self._events = events
        self._eval_cfg = eval_cfg
        self._lease = lease_seconds
        self._clock = clock
        self._lock = threading.Lock()
        self._items: Dict[str, QueueItem] = {}
        self.intake = 0
        for rec in state.samples.values():
            if not rec.staged_d2:
                continue
            if rec.staged_d3 or rec.quarantined:
                # Already decided in an earlier service lifetime.
                continue
            rationale = rec.rationale
            if rationale is None:
                continue
            self._items[rec.raw.id] = QueueItem(
                raw=rec.raw,
                rationale_text=rationale.text,
                revision=rationale.revision,
                version=1 + rec.review_count,
            )
        self.intake = len(self._items)

    @property
    def eval_config(self) -> EvalConfig:
        return self._eval_cfg

    def _available(self, item: QueueItem, now: float) -> bool:
        if item.terminal:
            return False
        return item.claimed_until is None or item.claimed_until <= now

    def next_item(self, reviewer: str) -> Optional[dict]:
        """Lease the oldest open item to the reviewer; None when drained."""
        with self._lock:
            now = self._clock()
            for item in self._items.values():
                if self._available(item, now):
                    item.claimed_by = reviewer
                    item.claimed_until = now + self._lease
                    item.version += 1
                    return item.snapshot(self._eval_cfg.l_max)
        return None

    def get_item(self, item_id: str) -> dict:
        with self._lock:
            item = self._items.get(item_id)
            if item is None:
                raise UnknownItem(f"no queue item '{item_id}'")
            return item.snapshot(self._eval_cfg.l_max)

    def decide(self, item_id: str, decision: ReviewDecision) -> DecisionOutcome:
        with self._lock:
            item = self._items.get(item_id)
            if item is None:
                raise UnknownItem(f"no queue item '{item_id}'")
            if decision.sample_version != item.version:
                raise VersionConflict(
                    f"item '{item_id}' is at version {item.version}, "
                    f"decision carries {decision.sample_version}")
            if item.terminal:
                raise VersionConflict(f"item '{item_id}' was already decided")
            if decision.action is ReviewAction.EDIT \
                    and decision.edited_text == item.rationale_text:
                raise InvalidDecision("edited text must differ from the current rationale")

            self._events.append(
                "review",
                sample_id=item_id,
                action=decision.action.value,
                reviewer=decision.reviewer,
                note=decision.note,
                edited_text=decision.edited_text,
                decided_at=decision.decided_at.isoformat(),
                sample_version=decision.sample_version,
            )

            if decision.action is ReviewAction.APPROVE:
                item.version += 1
                item.terminal = "d3"
                self._events.append("staged", sample_id=item_id, stage="d3",
                                    revision=item.revision)
                return DecisionOutcome("accepted", item.version, stage="d3")

            if decision.action is ReviewAction.REJECT:
                item.version += 1
                item.terminal = "quarantined"
                self._events.append("quarantined", sample_id=item_id,
                                    reason="rejected", detail=decision.note or "")
                return DecisionOutcome("quarantined", item.version, stage="quarantined")

            # Edit: replace, re-run the automatic gate, final ledger only on pass.
            draft = Rationale(text=decision.edited_text or "",
                              revision=item.revision + 1, origin=Origin.HUMAN_EDITED)
            verdict = evaluate(draft, item.raw, self._eval_cfg)
            self._events.append("evaluated", sample_id=item_id, **verdict_payload(verdict))
            item.version += 1
            if verdict.passed:
                item.rationale_text = draft.text
                item.revision = draft.revision
                item.terminal = "d3"
                self._events.append("edited", sample_id=item_id,
                                    revision=draft.revision, text=draft.text)
                self._events.append("staged", sample_id=item_id, stage="d3",
                                    revision=draft.revision)
                return DecisionOutcome("accepted", item.version, stage="d3")
            # Returned to the reviewer: keep the lease alive for another round.
            if item.claimed_by == decision.reviewer:
                item.claimed_until = self._clock() + self._lease
            return DecisionOutcome("evaluation_failed", item.version,
                                   verdict={"passed": False,
                                            "violations": sorted(
                                                v.value for v in verdict.violations),
                                            "token_count": verdict.token_count})

    def progress(self) -> Dict[str, int]:
        with self._lock:
            now = self._clock()
            open_count = leased = d3 = quarantined = 0
            for item in self._items.values():
                if item.terminal == "d3":
                    d3 += 1
                elif item.terminal == "quarantined":
                    quarantined += 1
                elif item.claimed_until is not None and item.claimed_until > now:
                    leased += 1
                else:
                    open_count += 1
            return {"open": open_count, "leased": leased,
                    "d3": d3, "quarantined": quarantined}


# -- HTTP layer ----------------------------------------------------------

def create_app(queue: ReviewQueue, tokens: Mapping[str, str],
               store_path: str = "", run_id: str = "",
               static_dir: Optional[str] = None) -> FastAPI:
    """Build the FastAPI app. ``tokens`` maps bearer token -> reviewer id."""
    app = FastAPI(title="cotforge review service", docs_url=None, redoc_url=None)

    _STATUS = {
        "Unauthorized": 401,
        "UnknownItem": 404,
        "VersionConflict": 409,
        "InvalidDecision": 400,
        "EmptyStage": 404,
        "StoreUnavailable": 503,
    }

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(status_code=_STATUS.get(exc.name, 400),
                            content={"error": exc.name, "detail": str(exc)})

    def _reviewer(request: Request) -> str:
        header = request.headers.get("authorization", "")
        if header.lower().startswith("bearer "):
            token = header[7:].strip()
            reviewer = tokens.get(token)
            if reviewer:
                return reviewer
        raise Unauthorized("missing or unknown reviewer token")

    @app.get("/queue/next")
    async def queue_next(request: Request):
        reviewer = _reviewer(request)
        item = queue.next_item(reviewer)
        if item is None:
            return Response(status_code=204)
        return item

    @app.get("/items/{item_id}")
    async def get_item(item_id: str, request: Request):
        _reviewer(request)
        return queue.get_item(item_id)

    @app.post("/items/{item_id}/decision")
    async def post_decision(item_id: str, request: Request):
        reviewer = _reviewer(request)
        body = await request.json()
        try:
            action = ReviewAction(str(body.get("action", "")))
        except ValueError:
            raise InvalidDecision(f"unknown action '{body.get('action')}'")
        if "sample_version" not in body:
            raise InvalidDecision("sample_version is required")
        decision = ReviewDecision(
            action=action,
            reviewer=reviewer,
            sample_version=int(body["sample_version"]),
            note=body.get("note"),
            edited_text=body.get("edited_text"),
        )
        return queue.decide(item_id, decision).to_dict()

    @app.get("/progress")
    async def progress():
        return queue.progress()

    @app.get("/export/d3")
    async def export_d3():
        from .pipeline import _record_for, _stage_members
        from .store import load_state

        state = load_state(store_path, run_id)
        members = sorted(_stage_members(state, "d3"), key=lambda r: r.raw.id)
        lines = [json.dumps(_record_for(rec, "d3", run_id), ensure_ascii=False)
                 for rec in members]
        return PlainTextResponse("\n".join(lines) + ("\n" if lines else ""),
                                 media_type="application/x-ndjson")

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
