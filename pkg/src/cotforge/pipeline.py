"""Stage 1+2 orchestration: generate, evaluate, rewrite until pass or
quarantine, persist every step, and report.

Samples are processed independently by a worker pool; one sample's chain
of generate -> evaluate -> rewrite is strictly sequential. All progress
goes through the run's append-only event log, so re-invoking a run id
resumes from the last persisted state and never repeats a provider call
for work already logged. Provider failures quarantine the one affected
sample; they never abort the run.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from . import tagformat
from .errors import (
    DomainError,
    DuplicateId,
    EmptyStage,
    ReservedTagInContent,
    SchemaViolation,
    StoreUnavailable,
)
from .evaluation import EvalConfig, evaluate, render_feedback
from .generation import (
    PromptTemplate,
    Purpose,
    build_provider_client,
    builtin_template,
    generate_rationale,
)
from .model import Origin, Rationale, RawSample
from .store import EventLog, RunState, SampleRecord, replay, verdict_payload

log = logging.getLogger(__name__)

RESERVED_TAG_FEEDBACK = (
    "the text embeds reserved tag markup; remove the literal "
    "<answer>/<thinking> tag strings from the reasoning"
)

EXPORT_STAGES = ("d1", "d2", "d3", "quarantined")
EXPORT_FORMATS = ("jsonl", "json")


@dataclass(frozen=True)
class PipelineConfig:
    eval: EvalConfig = field(default_factory=EvalConfig)
    provider: object = None  # ProviderConfig or a ready client (e.g. MockProvider)
    generate_template: Optional[PromptTemplate] = None
    rewrite_template: Optional[PromptTemplate] = None
    max_rewrites: int = 3
    workers: int = 4
    store_path: str = "./store"
    run_id: str = "run"

    def __post_init__(self):
        if self.max_rewrites < 0:
            raise ValueError("max_rewrites must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class RunReport:
    counts: Dict[str, int]
    rewrite_histogram: Dict[int, int]
    violation_histogram: Dict[str, int]
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "rewrite_histogram": {str(k): v for k, v in sorted(self.rewrite_histogram.items())},
            "violation_histogram": dict(sorted(self.violation_histogram.items())),
            "wall_time": self.wall_time,
        }


def ingest(corpus_file: str) -> List[RawSample]:
    """Read a line-delimited corpus of {id, image_ref, answer} records.

    Language tags are always derived from the answer text; any language
    field in the input is ignored.
    """
    try:
        fh = open(corpus_file, "r", encoding="utf-8")
    except OSError as exc:
        raise StoreUnavailable(f"cannot read corpus {corpus_file}: {exc}") from exc

    samples: List[RawSample] = []
    seen: Dict[str, int] = {}
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaViolation(lineno, "-", f"invalid JSON: {exc}") from exc
            if not isinstance(rec, dict):
                raise SchemaViolation(lineno, "-", "record must be an object")
            for key in ("id", "image_ref", "answer"):
                if key not in rec:
                    raise SchemaViolation(lineno, key, "missing")
            sample_id = str(rec["id"])
            if not sample_id:
                raise SchemaViolation(lineno, "id", "empty")
            if sample_id in seen:
                raise DuplicateId(sample_id, lineno)
            seen[sample_id] = lineno
            answer = str(rec["answer"])
            if not answer.strip():
                raise SchemaViolation(lineno, "answer", "empty after trimming")
            meta = rec.get("meta") or {}
            if not isinstance(meta, dict):
                raise SchemaViolation(lineno, "meta", "must be an object")
            samples.append(RawSample.create(
                id=sample_id,
                image_ref=str(rec["image_ref"]),
                answer=answer,
                meta={str(k): str(v) for k, v in meta.items()},
            ))
    return samples


def _templates(cfg: PipelineConfig) -> Tuple[PromptTemplate, PromptTemplate]:
    gen = cfg.generate_template or builtin_template(Purpose.GENERATE)
    rew = cfg.rewrite_template or builtin_template(Purpose.REWRITE)
    return gen, rew


def _rewrite_step(sample: RawSample, prior_text: str, feedback: str,
                  template: PromptTemplate, client) -> Tuple[str, bool]:
    """One rewrite call. Returns (text, tainted) where tainted means the
    completion still quotes reserved tag literals (the reserved-tag case is
    not one of the four violation kinds, so the prompt is rendered straight
    from the template contract rather than from a verdict)."""
    from .generation import DEFAULT_SYSTEM_PROMPT, _extract_thinking

    prompt = template.render(answer=sample.answer, feedback=feedback,
                             prior_rationale=prior_text)
    try:
        completion = client.complete(DEFAULT_SYSTEM_PROMPT, prompt)
        return _extract_thinking(completion), False
    except ReservedTagInContent as exc:
        payload = getattr(exc, "payload", "")
        if not payload:
            raise
        return payload, True


def _process_sample(sample: RawSample, rec: Optional[SampleRecord], cfg: PipelineConfig,
                    gen_tpl: PromptTemplate, rew_tpl: PromptTemplate,
                    client, events: EventLog) -> None:
    if rec is not None and (rec.staged_d2 or rec.quarantined):
        return

    try:
        if rec is not None and rec.rationale is not None:
            text = rec.rationale.text
            revision = rec.rationale.revision
            tainted = tagformat.contains_reserved_tag(text)
        else:
            try:
                rationale = generate_rationale(sample, gen_tpl, client)
                text, revision, tainted = rationale.text, 0, False
            except ReservedTagInContent as exc:
                payload = getattr(exc, "payload", "")
                if not payload:
                    raise
                text, revision, tainted = payload, 0, True
            events.append("generated", sample_id=sample.id, revision=revision, text=text)

        while True:
            if tainted:
                feedback = RESERVED_TAG_FEEDBACK
            else:
                verdict = rec.verdict_for_revision(revision) if rec is not None else None
                if verdict is None:
                    rationale = Rationale(
                        text=text, revision=revision,
                        origin=Origin.GENERATED if revision == 0 else Origin.REWRITTEN)
                    verdict = evaluate(rationale, sample, cfg.eval)
                    events.append("evaluated", sample_id=sample.id, **verdict_payload(verdict))
                if verdict.passed:
                    events.append("staged", sample_id=sample.id, stage="d2", revision=revision)
                    return
                feedback = render_feedback(verdict)

            if revision >= cfg.max_rewrites:
                events.append("quarantined", sample_id=sample.id,
                              reason="rewrites_exhausted", revision=revision)
                return

            text, tainted = _rewrite_step(sample, text, feedback, rew_tpl, client)
            revision += 1
            events.append("rewritten", sample_id=sample.id, revision=revision, text=text)
            # Anything loaded from the replayed record is now stale.
            rec = None
    except DomainError as exc:
        log.warning("sample %s quarantined: %s: %s", sample.id, exc.name, exc)
        events.append("quarantined", sample_id=sample.id,
                      reason="provider_error", detail=f"{exc.name}: {exc}")


def build_report(state: RunState, wall_time: float) -> RunReport:
    counts = state.counts()
    rewrite_hist: Dict[int, int] = {}
    violation_hist: Dict[str, int] = {}
    for rec in state.samples.values():
        if rec.terminal_stage12 and rec.rationale is not None:
            rev = (rec.d2_rationale or rec.rationale).revision
            rewrite_hist[rev] = rewrite_hist.get(rev, 0) + 1
        for v in rec.verdicts:
            for viol in v.violations:
                violation_hist[viol.value] = violation_hist.get(viol.value, 0) + 1
    return RunReport(
        counts={"d1": counts["d1"], "d2": counts["d2"], "quarantined": counts["quarantined"]},
        rewrite_histogram=rewrite_hist,
        violation_histogram=violation_hist,
        wall_time=wall_time,
    )


def run_stage12(samples: List[RawSample], cfg: PipelineConfig) -> RunReport:
    started = time.monotonic()
    events = EventLog.for_run(cfg.store_path, cfg.run_id)
    try:
        state = replay(events.read())
        if not state.started:
            events.append("run_started", run_id=cfg.run_id)
        for sample in samples:
            if sample.id not in state.samples:
                events.append("ingested", sample={
                    "id": sample.id,
                    "image_ref": sample.image_ref,
                    "answer": sample.answer,
                    "language": sample.language.value,
                    "meta": dict(sample.meta),
                })

        client = build_provider_client(cfg.provider) if cfg.provider is not None else None
        if client is None:
            raise StoreUnavailable("pipeline requires a provider")
        gen_tpl, rew_tpl = _templates(cfg)

        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [
                pool.submit(_process_sample, sample, state.samples.get(sample.id),
                            cfg, gen_tpl, rew_tpl, client, events)
                for sample in samples
            ]
            for fut in as_completed(futures):
                fut.result()  # per-sample errors are handled inside; re-raise the rest

        final = replay(events.read())
        report = build_report(final, wall_time=time.monotonic() - started)
        events.append("run_finished", report=report.to_dict())
        return report
    finally:
        events.close()


def _emittable(text: str) -> str:
    # Reserved-tag content cannot be represented in the tagged encoding (no
    # escaping exists); the event log keeps the verbatim audit copy.
    return "" if tagformat.contains_reserved_tag(text) else text


def _record_for(rec: SampleRecord, stage: str, run_id: str) -> dict:
    if stage == "d1":
        # The raw ledger carries the initial generation, pre-gate.
        rationale = rec.initial_rationale or rec.rationale
        rationale_text = rationale.text if rationale else ""
        revision = rationale.revision if rationale else 0
        violations: List[str] = []
    elif stage == "d2":
        rationale = rec.d2_rationale or rec.rationale
        rationale_text = rationale.text if rationale else ""
        revision = rationale.revision if rationale else 0
        violations = []
    elif stage == "d3":
        rationale_text = rec.rationale.text if rec.rationale else ""
        revision = rec.rationale.revision if rec.rationale else 0
        violations = []
    else:  # quarantined
        rationale_text = rec.rationale.text if rec.rationale else ""
        revision = rec.rationale.revision if rec.rationale else 0
        last = rec.verdicts[-1] if rec.verdicts else None
        violations = sorted(v.value for v in last.violations) if last else []
    return {
        "schema_version": 1,
        "id": rec.raw.id,
        "image_ref": rec.raw.image_ref,
        "answer": rec.raw.answer,
        "language": rec.raw.language.value,
        "cot": tagformat.emit(rec.raw.answer, _emittable(rationale_text)),
        "stage": stage,
        "revision": revision,
        "violations": violations,
        "run_id": run_id,
    }


def _stage_members(state: RunState, stage: str) -> List[SampleRecord]:
    if stage == "d1":
        return [r for r in state.samples.values() if r.rationale is not None]
    if stage == "d2":
        return [r for r in state.samples.values() if r.staged_d2 and not r.quarantined]
    if stage == "d3":
        return [r for r in state.samples.values() if r.staged_d3]
    if stage == "quarantined":
        return [r for r in state.samples.values() if r.quarantined]
    raise ValueError(f"unknown stage '{stage}'")


def export(state: RunState, stage: str, fmt: str, out: str, run_id: str) -> int:
    """Write the stage ledger as dataset records with stable id ordering."""
    if stage not in EXPORT_STAGES:
        raise ValueError(f"stage must be one of {EXPORT_STAGES}")
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"format must be one of {EXPORT_FORMATS}")
    members = sorted(_stage_members(state, stage), key=lambda r: r.raw.id)
    if not members:
        raise EmptyStage(f"stage '{stage}' holds no samples")
    records = [_record_for(rec, stage, run_id) for rec in members]
    out_path = Path(out)
    try:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w", encoding="utf-8") as fh:
            if fmt == "jsonl":
                for rec in records:
                    fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
            else:
                json.dump(records, fh, ensure_ascii=False, indent=2)
                fh.write("\n")
    except OSError as exc:
        raise StoreUnavailable(f"cannot write export {out}: {exc}") from exc
    return len(records)


REQUIRED_DATASET_FIELDS = ("schema_version", "id", "image_ref", "answer",
                           "language", "cot", "stage", "revision", "violations", "run_id")


def validate_dataset(path: str) -> int:
    """Check an exported dataset file: schema fields, parseable cot, and
    agreement between the record answer and the cot's answer payload."""
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise StoreUnavailable(f"cannot read dataset {path}: {exc}") from exc
    count = 0
    seen: Dict[str, int] = {}
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaViolation(lineno, "-", f"invalid JSON: {exc}") from exc
            for key in REQUIRED_DATASET_FIELDS:
                if key not in rec:
                    raise SchemaViolation(lineno, key, "missing")
            sample_id = str(rec["id"])
            if sample_id in seen:
                raise DuplicateId(sample_id, lineno)
            seen[sample_id] = lineno
            try:
                parsed = tagformat.parse(rec["cot"])
            except DomainError as exc:
                raise type(exc)(f"line {lineno}: {exc}")
            if parsed.answer != rec["answer"]:
                raise SchemaViolation(lineno, "cot", "answer payload differs from answer field")
            count += 1
    if count == 0:
        raise EmptyStage(f"dataset {path} holds no records")
    return count
