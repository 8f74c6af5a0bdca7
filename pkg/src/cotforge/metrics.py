"""Corpus scoring: BLEU-1..4 and word-level accuracy.

BLEU here is corpus-level modified n-gram precision with clipping, the
standard brevity penalty BP = min(1, exp(1 - ref_len/hyp_len)), and
add-one smoothing on higher-order precisions whose clipped match count is
zero. Orders with no n-grams at all (every hypothesis shorter than n)
contribute a neutral precision of 1. Tokenization follows the evaluation
protocol: per-codepoint for CJK, lowercased whitespace words for Latin,
and the union of both rules for mixed-script text. One reference per
hypothesis.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import EmptyCorpus, LengthMismatch, SchemaViolation, StoreUnavailable
from .lang import Language, is_cjk

MAX_ORDER = 4


def tokenize_for_bleu(text: str, language: Language) -> List[str]:
    if language is Language.CJK:
        return [ch for ch in text if not ch.isspace()]
    if language is Language.LATIN:
        return text.lower().split()
    # Mixed: CJK codepoints become single tokens, Latin runs split on
    # whitespace and lowercase.
    tokens: List[str] = []
    run: List[str] = []
    for ch in text:
        if is_cjk(ch):
            if run:
                tokens.append("".join(run).lower())
                run = []
            tokens.append(ch)
        elif ch.isspace():
            if run:
                tokens.append("".join(run).lower())
                run = []
        else:
            run.append(ch)
    if run:
        tokens.append("".join(run).lower())
    return tokens


@dataclass(frozen=True)
class BleuReport:
    """Precisions are the effective (post-smoothing) values, so the identity
    bleu[n] = brevity_penalty * geomean(precisions[:n]) holds exactly."""

    precisions: Tuple[float, float, float, float]
    brevity_penalty: float
    bleu: Tuple[float, float, float, float]
    hyp_len: int
    ref_len: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "bleu1": self.bleu[0],
            "bleu2": self.bleu[1],
            "bleu3": self.bleu[2],
            "bleu4": self.bleu[3],
            "precisions": list(self.precisions),
            "brevity_penalty": self.brevity_penalty,
            "hyp_len": self.hyp_len,
            "ref_len": self.ref_len,
        }

    def table(self) -> str:
        lines = ["metric    value", "------    -----"]
        for n in range(MAX_ORDER):
            lines.append(f"BLEU-{n + 1}    {self.bleu[n]:.4f}")
        lines.append(f"BP        {self.brevity_penalty:.4f}")
        lines.append(f"lengths   hyp={self.hyp_len} ref={self.ref_len}")
        return "\n".join(lines)


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu_from_tokens(hyp_tokens: Sequence[Sequence[str]],
                     ref_tokens: Sequence[Sequence[str]]) -> BleuReport:
    if len(hyp_tokens) != len(ref_tokens):
        raise LengthMismatch(f"{len(hyp_tokens)} hypotheses vs {len(ref_tokens)} references")
    if not hyp_tokens:
        raise EmptyCorpus("need at least one hypothesis/reference pair")

    hyp_len = sum(len(t) for t in hyp_tokens)
    ref_len = sum(len(t) for t in ref_tokens)

    precisions: List[float] = []
    for n in range(1, MAX_ORDER + 1):
        matches = 0
        total = 0
        for hyp, ref in zip(hyp_tokens, ref_tokens):
            hyp_counts = _ngram_counts(hyp, n)
            if not hyp_counts:
                continue
            ref_counts = _ngram_counts(ref, n)
            total += sum(hyp_counts.values())
            matches += sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
        if total == 0:
            precisions.append(1.0)
        elif matches == 0:
            # Add-one smoothing for zero-count higher orders; unigram zero
            # stays zero and drives the score to zero.
            precisions.append((matches + 1) / (total + 1) if n > 1 else 0.0)
        else:
            precisions.append(matches / total)

    if hyp_len == 0:
        bp = 1.0 if ref_len == 0 else 0.0
    else:
        bp = min(1.0, math.exp(1.0 - ref_len / hyp_len))

    scores: List[float] = []
    for n in range(1, MAX_ORDER + 1):
        ps = precisions[:n]
        if any(p == 0.0 for p in ps):
            scores.append(0.0)
        else:
            geo = math.exp(sum(math.log(p) for p in ps) / n)
            scores.append(bp * geo)

    return BleuReport(
        precisions=tuple(precisions),
        brevity_penalty=bp,
        bleu=tuple(scores),
        hyp_len=hyp_len,
        ref_len=ref_len,
    )


def bleu(hypotheses: Sequence[str], references: Sequence[str],
         language: Language) -> BleuReport:
    if len(hypotheses) != len(references):
        raise LengthMismatch(f"{len(hypotheses)} hypotheses vs {len(references)} references")
    if not hypotheses:
        raise EmptyCorpus("need at least one hypothesis/reference pair")
    return bleu_from_tokens(
        [tokenize_for_bleu(h, language) for h in hypotheses],
        [tokenize_for_bleu(r, language) for r in references],
    )


def _normalize(text: str) -> str:
    return " ".join(text.split()).casefold()


def word_accuracy(hypotheses: Sequence[str], references: Sequence[str]) -> float:
    """Fraction of case-insensitive, whitespace-normalized exact matches."""
    if len(hypotheses) != len(references):
        raise LengthMismatch(f"{len(hypotheses)} hypotheses vs {len(references)} references")
    if not hypotheses:
        raise EmptyCorpus("need at least one hypothesis/reference pair")
    hits = sum(1 for h, r in zip(hypotheses, references) if _normalize(h) == _normalize(r))
    return hits / len(hypotheses)


def read_predictions(path: str) -> Dict[str, str]:
    """Read a line-delimited prediction file of {id, prediction} records."""
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise StoreUnavailable(f"cannot read predictions {path}: {exc}") from exc
    out: Dict[str, str] = {}
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaViolation(lineno, "-", f"invalid JSON: {exc}") from exc
            if "id" not in rec:
                raise SchemaViolation(lineno, "id", "missing")
            if "prediction" not in rec:
                raise SchemaViolation(lineno, "prediction", "missing")
            out[str(rec["id"])] = str(rec["prediction"])
    return out
