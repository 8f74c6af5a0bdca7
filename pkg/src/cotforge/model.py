"""Domain types and the staged-corpus state machine.

All types are immutable values; transitions return new instances. A sample
moves strictly forward: generated rationales form the raw ledger, samples
whose last verdict passed the automatic gate enter the curated ledger, and
only an expert Approve/Edit decision admits a sample into the final ledger.
Rejects and exhausted rewrites land in a terminal quarantine ledger.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Mapping, Optional, Tuple

from .errors import IllegalTransition, InvalidDecision, MissingReview
from .lang import Language, detect_language


class Stage(str, enum.Enum):
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"


class Origin(str, enum.Enum):
    GENERATED = "generated"
    REWRITTEN = "rewritten"
    HUMAN_EDITED = "human_edited"


class Violation(str, enum.Enum):
    LENGTH_EXCEEDED = "LengthExceeded"
    MISSING_VISUAL = "MissingVisual"
    MISSING_SEMANTIC = "MissingSemantic"
    LOGICAL_INCONSISTENCY = "LogicalInconsistency"


class ReviewAction(str, enum.Enum):
    APPROVE = "approve"
    REJECT = "reject"
    EDIT = "edit"


def utcnow() -> datetime:
    return datetime.now(timezone.utc)


@dataclass(frozen=True)
class RawSample:
    """One annotation unit: an image reference and its ground-truth answer."""

    id: str
    image_ref: str
    answer: str
    language: Language
    meta: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise ValueError("sample id must be non-empty")
        if not self.answer.strip():
            raise ValueError("answer must be non-empty after trimming")

    @classmethod
    def create(cls, id: str, image_ref: str, answer: str,
               meta: Optional[Mapping[str, str]] = None) -> "RawSample":
        """Build a sample with the language tag derived from the answer text."""
        return cls(id=id, image_ref=image_ref, answer=answer,
                   language=detect_language(answer), meta=dict(meta or {}))


@dataclass(frozen=True)
class Rationale:
    """A chain-of-thought text with its provenance."""

    text: str
    revision: int
    origin: Origin

    def __post_init__(self):
        if not self.text:
            raise ValueError("rationale text must be non-empty")
        if self.revision < 0:
            raise ValueError("revision must be non-negative")
        if (self.revision == 0) != (self.origin is Origin.GENERATED):
            raise ValueError("revision 0 if and only if origin is generated")


@dataclass(frozen=True)
class EvalVerdict:
    """Outcome of the automatic quality gate for one rationale revision."""

    passed: bool
    violations: frozenset
    token_count: int
    evaluated_at: datetime
    revision: int = 0

    def __post_init__(self):
        if self.passed != (not self.violations):
            raise ValueError("passed must hold exactly when violations is empty")
        if self.token_count < 0:
            raise ValueError("token_count must be non-negative")


@dataclass(frozen=True)
class ReviewDecision:
    """An expert's approve/reject/edit action on a curated sample."""

    action: ReviewAction
    reviewer: str
    sample_version: int
    note: Optional[str] = None
    edited_text: Optional[str] = None
    decided_at: datetime = field(default_factory=utcnow)

    def __post_init__(self):
        if not self.reviewer:
            raise InvalidDecision("reviewer id must be non-empty")
        if self.action is ReviewAction.REJECT and not (self.note or "").strip():
            raise InvalidDecision("reject requires a non-empty note")
        if self.action is ReviewAction.EDIT and not (self.edited_text or "").strip():
            raise InvalidDecision("edit requires non-empty edited_text")


@dataclass(frozen=True)
class CoTSample:
    """A raw sample joined with its current rationale and full audit trail."""

    raw: RawSample
    rationale: Rationale
    stage: Stage
    verdicts: Tuple[EvalVerdict, ...] = ()
    review: Optional[ReviewDecision] = None

    def with_verdict(self, verdict: EvalVerdict) -> "CoTSample":
        """Append to the audit trail; verdicts are never truncated."""
        return replace(self, verdicts=self.verdicts + (verdict,))

    def with_rationale(self, rationale: Rationale) -> "CoTSample":
        return replace(self, rationale=rationale)

    def with_review(self, decision: ReviewDecision) -> "CoTSample":
        if decision.action is ReviewAction.EDIT and decision.edited_text == self.rationale.text:
            raise InvalidDecision("edited text must differ from the current rationale")
        return replace(self, review=decision)

    @property
    def last_verdict(self) -> Optional[EvalVerdict]:
        return self.verdicts[-1] if self.verdicts else None


_FORWARD = {
    (Stage.D1, Stage.D2),
    (Stage.D2, Stage.D3),
}


def advance_stage(sample: CoTSample, target: Stage) -> CoTSample:
    """Move a sample one stage forward, enforcing the entry conditions.

    The only legal transitions are D1->D2 (last verdict passed) and D2->D3
    (Approve or Edit decision recorded). Everything else raises.
    """
    if (sample.stage, target) not in _FORWARD:
        raise IllegalTransition(f"{sample.stage.value} -> {target.value}")
    if target is Stage.D2:
        last = sample.last_verdict
        if last is None or not last.passed:
            raise IllegalTransition(
                f"{sample.stage.value} -> {target.value}: last verdict must be a pass")
    else:  # target is Stage.D3
        if sample.review is None:
            raise MissingReview("entry into the final stage requires a review decision")
        if sample.review.action not in (ReviewAction.APPROVE, ReviewAction.EDIT):
            raise IllegalTransition(
                f"{sample.stage.value} -> {target.value}: decision was a reject")
    return replace(sample, stage=target)
