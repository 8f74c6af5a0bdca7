"""Automatic quality gate for generated rationales.

A rationale passes when all four checks hold: it fits the token budget
(strictly under the limit), it analyzes visual form, it analyzes semantic
plausibility, and it is logically consistent with the answer. Every check
is always evaluated so the violation set is complete feedback for the
rewriter; nothing short-circuits.

Token counting is deliberately self-contained so verdicts are reproducible
without any model tokenizer: one left-to-right scan in which each CJK
ideograph counts as one token, each maximal run of non-CJK alphanumerics
or apostrophes counts as one token, and each remaining non-space character
counts as one standalone punctuation token. The rule is script-driven, so
the same text counts the same regardless of its language tag.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from datetime import datetime
from typing import Callable, Optional, Sequence, Tuple

from .errors import ConfigError
from .lang import Language, is_cjk
from .model import EvalVerdict, Rationale, RawSample, Violation, utcnow

log = logging.getLogger(__name__)

LEXICON_SCHEMA_VERSION = 1

DEFAULT_VISUAL_LEXICON: Tuple[str, ...] = (
    "letter",
    "shape",
    "stroke",
    "glyph",
    "lookalike",
    "look-alike",
    "look alike",
    "visually similar",
    "visual",
    "font",
    "stylized",
    "character form",
)

DEFAULT_SEMANTIC_LEXICON: Tuple[str, ...] = (
    "meaning",
    "context",
    "plausib",
    "refers to",
    "semantic",
    "denotes",
    "connotation",
    "interpretation",
    "makes sense",
)

# Conclusion pattern: "the most plausible <anything> is X" within a sentence.
_CONCLUSION_RE = re.compile(
    r"the most plausible\b[^.?!]*?\bis\s+[\"'“‘]?([\w']+)",
    re.IGNORECASE,
)

_RULED_OUT_RE = re.compile(r"\brule[ds]? out\b|\bruled-out\b|\bexcluded\b|\bdiscarded\b",
                           re.IGNORECASE)

_QUOTED_RE = re.compile(r"[\"“]([^\"“”]+)[\"”]")
_ALLCAPS_RE = re.compile(r"\b[A-Z][A-Z0-9']+\b")

_SENTENCE_SPLIT_RE = re.compile(r"[.!?;]+")


def count_tokens(text: str, language: Language = Language.MIXED) -> int:
    """Count tokens with the documented script-driven scan.

    The language tag is accepted for interface symmetry with the scoring
    module; counting itself depends only on the characters present.
    """
    del language
    count = 0
    in_word = False
    for ch in text:
        if is_cjk(ch):
            count += 1
            in_word = False
        elif ch.isalnum() or ch == "'":
            if not in_word:
                count += 1
                in_word = True
        elif ch.isspace():
            in_word = False
        else:
            count += 1
            in_word = False
    return count


def _match_entry(entry: str, lowered_text: str) -> bool:
    if entry.startswith("re:"):
        return re.search(entry[3:], lowered_text, re.IGNORECASE) is not None
    return entry.lower() in lowered_text


def _matches_lexicon(text: str, lexicon: Sequence[str]) -> bool:
    lowered = text.lower()
    return any(_match_entry(entry, lowered) for entry in lexicon)


# -- consistency rules ---------------------------------------------------
#
# A rule takes (rationale_text, answer) and returns True when it FIRES,
# i.e. when it detects an inconsistency.

def _conclusion(text: str) -> Optional[str]:
    m = _CONCLUSION_RE.search(text)
    return m.group(1) if m else None


def _ruled_out_candidates(text: str) -> set:
    found = set()
    for sentence in _SENTENCE_SPLIT_RE.split(text):
        if not _RULED_OUT_RE.search(sentence):
            continue
        for m in _QUOTED_RE.finditer(sentence):
            found.add(m.group(1).strip().casefold())
        for m in _ALLCAPS_RE.finditer(sentence):
            found.add(m.group(0).casefold())
    return found


def rule_conclusion_mismatch(text: str, answer: str) -> bool:
    """Fires when the rationale concludes a candidate different from the answer."""
    concluded = _conclusion(text)
    return concluded is not None and concluded.casefold() != answer.strip().casefold()


def rule_ruled_out_conclusion(text: str, answer: str) -> bool:
    """Fires when the rationale rules a candidate out and then concludes it."""
    del answer
    concluded = _conclusion(text)
    return concluded is not None and concluded.casefold() in _ruled_out_candidates(text)


DEFAULT_CONSISTENCY_RULES: Tuple[Tuple[str, Callable[[str, str], bool]], ...] = (
    ("ruled-out-conclusion", rule_ruled_out_conclusion),
    ("conclusion-mismatch", rule_conclusion_mismatch),
)

_RULES_BY_NAME = dict(DEFAULT_CONSISTENCY_RULES)


@dataclass(frozen=True)
class EvalConfig:
    """Parameters of the quality gate."""

    l_max: int = 100
    visual_lexicon: Tuple[str, ...] = DEFAULT_VISUAL_LEXICON
    semantic_lexicon: Tuple[str, ...] = DEFAULT_SEMANTIC_LEXICON
    consistency_rules: Tuple[Tuple[str, Callable[[str, str], bool]], ...] = (
        DEFAULT_CONSISTENCY_RULES
    )
    judge: object = None  # optional provider for judge-assisted consistency

    def __post_init__(self):
        if self.l_max < 1:
            raise ValueError("l_max must be >= 1")
        if not self.visual_lexicon or not self.semantic_lexicon:
            raise ValueError("lexicons must be non-empty")


def has_visual(text: str, cfg: Optional[EvalConfig] = None) -> bool:
    lexicon = (cfg or EvalConfig()).visual_lexicon
    return _matches_lexicon(text, lexicon)


def has_semantic(text: str, cfg: Optional[EvalConfig] = None) -> bool:
    lexicon = (cfg or EvalConfig()).semantic_lexicon
    return _matches_lexicon(text, lexicon)


def check_consistency(text: str, answer: str, cfg: Optional[EvalConfig] = None) -> bool:
    """True iff the answer appears verbatim and no consistency rule fires.

    When a judge provider is configured its yes/no verdict overrides the
    heuristic; if the judge is unreachable the heuristic verdict stands and
    the degradation is logged.
    """
    cfg = cfg or EvalConfig()
    heuristic = answer.strip().casefold() in text.casefold()
    if heuristic:
        heuristic = not any(rule(text, answer) for _, rule in cfg.consistency_rules)
    if cfg.judge is not None:
        try:
            return _ask_judge(cfg.judge, text, answer)
        except Exception as exc:
            log.warning("judge unavailable (%s); using heuristic verdict", exc)
    return heuristic


def _ask_judge(judge, text: str, answer: str) -> bool:
    from .generation import build_provider_client

    client = build_provider_client(judge)
    reply = client.complete(
        system="You check reasoning for internal consistency. Reply with exactly 'yes' or 'no'.",
        user=(f"Answer: {answer}\nRationale: {text}\n\n"
              "Does the rationale argue coherently for this answer, "
              "without contradicting itself? Reply 'yes' or 'no'."),
    )
    return reply.strip().lower().startswith("y")


def evaluate(rationale: Rationale, sample: RawSample, cfg: EvalConfig,
             now: Optional[datetime] = None) -> EvalVerdict:
    """Run all four checks and report the exact set of failed ones."""
    tokens = count_tokens(rationale.text, sample.language)
    violations = set()
    if tokens >= cfg.l_max:
        violations.add(Violation.LENGTH_EXCEEDED)
    if not has_visual(rationale.text, cfg):
        violations.add(Violation.MISSING_VISUAL)
    if not has_semantic(rationale.text, cfg):
        violations.add(Violation.MISSING_SEMANTIC)
    if not check_consistency(rationale.text, sample.answer, cfg):
        violations.add(Violation.LOGICAL_INCONSISTENCY)
    return EvalVerdict(
        passed=not violations,
        violations=frozenset(violations),
        token_count=tokens,
        evaluated_at=now or utcnow(),
        revision=rationale.revision,
    )


_FEEDBACK_PHRASES = {
    Violation.LENGTH_EXCEEDED: "the reasoning is too long at {tokens} tokens; tighten it well under the budget",
    Violation.MISSING_VISUAL: "it never analyzes visual form (letter shapes, lookalike candidates)",
    Violation.MISSING_SEMANTIC: "it never analyzes semantic plausibility (meaning, context)",
    Violation.LOGICAL_INCONSISTENCY: "its argument is inconsistent with the answer (mention the answer and conclude it)",
}


def render_feedback(verdict: EvalVerdict) -> str:
    """Human-readable rendering of a verdict's violations, for the rewriter."""
    parts = [
        _FEEDBACK_PHRASES[v].format(tokens=verdict.token_count)
        for v in sorted(verdict.violations, key=lambda v: v.value)
    ]
    return "; ".join(parts) if parts else "no problems found"


def load_eval_config(path: str, judge: object = None) -> EvalConfig:
    """Load gate parameters from a versioned TOML file.

    Schema (version 1): keys ``schema_version``, ``l_max``, ``visual``,
    ``semantic``, ``consistency_rules`` (names of built-in rules).
    """
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read lexicon file {path}: {exc}") from exc
    except Exception as exc:
        raise ConfigError(f"malformed lexicon file {path}: {exc}") from exc

    version = data.get("schema_version", LEXICON_SCHEMA_VERSION)
    if version != LEXICON_SCHEMA_VERSION:
        raise ConfigError(f"unsupported lexicon schema_version {version}")

    rule_names = data.get("consistency_rules")
    if rule_names is None:
        rules = DEFAULT_CONSISTENCY_RULES
    else:
        try:
            rules = tuple((name, _RULES_BY_NAME[name]) for name in rule_names)
        except KeyError as exc:
            raise ConfigError(f"unknown consistency rule {exc}") from exc

    return EvalConfig(
        l_max=int(data.get("l_max", 100)),
        visual_lexicon=tuple(data.get("visual", DEFAULT_VISUAL_LEXICON)),
        semantic_lexicon=tuple(data.get("semantic", DEFAULT_SEMANTIC_LEXICON)),
        consistency_rules=rules,
        judge=judge,
    )
