"""Append-only per-run event log and the state replayed from it.

Every state change in a run is one JSON line: ingested, generated,
evaluated, rewritten, staged, quarantined, review, edited, run_started,
run_finished. Ordering is per-sample causal (a sample's events appear in
the order they happened); events of different samples may interleave.
Replaying the log reconstructs the full run state, which is what gives the
pipeline resume, idempotence, and the audit trail.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Dict, Iterator, List, Optional

from .errors import StoreUnavailable
from .lang import Language
from .model import (
    EvalVerdict,
    Origin,
    Rationale,
    RawSample,
    ReviewAction,
    Violation,
    utcnow,
)

SCHEMA_VERSION = 1


class EventLog:
    """Thread-safe append-only JSONL log for one run."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._seq = 0
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            if self.path.exists():
                self._seq = sum(1 for _ in self.read())
            self._fh = open(self.path, "a", encoding="utf-8")
        except OSError as exc:
            raise StoreUnavailable(f"cannot open event log {self.path}: {exc}") from exc

    @classmethod
    def for_run(cls, store_path: str, run_id: str) -> "EventLog":
        return cls(Path(store_path) / "runs" / f"{run_id}.events.jsonl")

    def append(self, event: str, **payload) -> None:
        with self._lock:
            self._seq += 1
            record = {"seq": self._seq, "ts": utcnow().isoformat(), "event": event}
            record.update(payload)
            try:
                self._fh.write(json.dumps(record, ensure_ascii=False) + "\n")
                self._fh.flush()
            except OSError as exc:
                raise StoreUnavailable(f"cannot append to {self.path}: {exc}") from exc

    def read(self) -> Iterator[dict]:
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        yield json.loads(line)
        except OSError as exc:
            raise StoreUnavailable(f"cannot read event log {self.path}: {exc}") from exc

    def close(self) -> None:
        with self._lock:
            self._fh.close()


@dataclass
class SampleRecord:
    """Replayed state of one sample."""

    raw: RawSample
    rationale: Optional[Rationale] = None
    initial_rationale: Optional[Rationale] = None
    verdicts: List[EvalVerdict] = field(default_factory=list)
    staged_d2: bool = False
    staged_d3: bool = False
    quarantined: bool = False
    quarantine_reason: str = ""
    review: Optional[dict] = None
    review_count: int = 0
    d2_rationale: Optional[Rationale] = None

    @property
    def terminal_stage12(self) -> bool:
        return self.staged_d2 or self.quarantined

    @property
    def in_d2_queue(self) -> bool:
        """Awaiting expert review: curated but neither final nor quarantined."""
        return self.staged_d2 and not self.staged_d3 and not self.quarantined

    def verdict_for_revision(self, revision: int) -> Optional[EvalVerdict]:
        for v in reversed(self.verdicts):
            if v.revision == revision:
                return v
        return None


@dataclass
class RunState:
    run_id: str = ""
    started: bool = False
    samples: Dict[str, SampleRecord] = field(default_factory=dict)
    last_report: Optional[dict] = None

    def counts(self) -> Dict[str, int]:
        d1 = sum(1 for r in self.samples.values() if r.rationale is not None)
        d2 = sum(1 for r in self.samples.values() if r.staged_d2 and not r.quarantined)
        d3 = sum(1 for r in self.samples.values() if r.staged_d3)
        q = sum(1 for r in self.samples.values() if r.quarantined)
        return {"d1": d1, "d2": d2, "d3": d3, "quarantined": q}


def _verdict_from_payload(p: dict) -> EvalVerdict:
    return EvalVerdict(
        passed=bool(p["passed"]),
        violations=frozenset(Violation(v) for v in p.get("violations", [])),
        token_count=int(p["token_count"]),
        evaluated_at=datetime.fromisoformat(p["evaluated_at"]),
        revision=int(p.get("revision", 0)),
    )


def verdict_payload(v: EvalVerdict) -> dict:
    return {
        "passed": v.passed,
        "violations": sorted(viol.value for viol in v.violations),
        "token_count": v.token_count,
        "evaluated_at": v.evaluated_at.isoformat(),
        "revision": v.revision,
    }


def replay(events: Iterator[dict]) -> RunState:
    state = RunState()
    for ev in events:
        kind = ev["event"]
        if kind == "run_started":
            state.started = True
            state.run_id = ev.get("run_id", "")
            continue
        if kind == "run_finished":
            state.last_report = ev.get("report")
            continue
        if kind == "ingested":
            s = ev["sample"]
            state.samples[s["id"]] = SampleRecord(raw=RawSample(
                id=s["id"],
                image_ref=s.get("image_ref", ""),
                answer=s["answer"],
                language=Language(s["language"]),
                meta=s.get("meta", {}),
            ))
            continue

        rec = state.samples.get(ev.get("sample_id", ""))
        if rec is None:
            continue  # tolerate foreign events rather than failing a whole run
        if kind in ("generated", "rewritten", "edited"):
            origin = {"generated": Origin.GENERATED,
                      "rewritten": Origin.REWRITTEN,
                      "edited": Origin.HUMAN_EDITED}[kind]
            rec.rationale = Rationale(text=ev["text"], revision=int(ev["revision"]),
                                      origin=origin)
            if kind == "generated":
                rec.initial_rationale = rec.rationale
        elif kind == "evaluated":
            rec.verdicts.append(_verdict_from_payload(ev))
        elif kind == "staged":
            if ev["stage"] == "d2":
                rec.staged_d2 = True
                rec.d2_rationale = rec.rationale
            elif ev["stage"] == "d3":
                rec.staged_d3 = True
        elif kind == "quarantined":
            rec.quarantined = True
            rec.quarantine_reason = ev.get("reason", "")
        elif kind == "review":
            rec.review = {
                "action": ev["action"],
                "reviewer": ev["reviewer"],
                "note": ev.get("note"),
                "edited_text": ev.get("edited_text"),
                "decided_at": ev.get("decided_at"),
                "sample_version": ev.get("sample_version"),
            }
            rec.review_count += 1
    return state


def load_state(store_path: str, run_id: str) -> RunState:
    path = Path(store_path) / "runs" / f"{run_id}.events.jsonl"
    if not path.exists():
        raise StoreUnavailable(f"no event log for run '{run_id}' under {store_path}")
    log = EventLog(path)
    try:
        return replay(log.read())
    finally:
        log.close()
