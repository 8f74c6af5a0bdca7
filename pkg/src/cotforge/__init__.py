"""cotforge: staged chain-of-thought dataset construction and scoring.

The library covers the full curation path for scene-text corpora:
generation of reasoning chains through a pluggable provider, an automatic
quality gate with rewrite feedback, an expert review queue with optimistic
concurrency, the tagged on-disk sample encoding, and the BLEU/accuracy
scoring protocol. The ``cotforge`` CLI composes everything.
"""

from .errors import DomainError
from .evaluation import EvalConfig, count_tokens, evaluate
from .generation import (
    MockProvider,
    PromptTemplate,
    ProviderConfig,
    Purpose,
    generate_rationale,
    rewrite_rationale,
)
from .lang import Language, detect_language
from .metrics import BleuReport, bleu, tokenize_for_bleu, word_accuracy
from .model import (
    CoTSample,
    EvalVerdict,
    Origin,
    Rationale,
    RawSample,
    ReviewAction,
    ReviewDecision,
    Stage,
    Violation,
    advance_stage,
)
from .pipeline import PipelineConfig, RunReport, export, ingest, run_stage12
from .review import ReviewQueue, create_app
from .tagformat import TaggedSample, emit, parse

__version__ = "0.1.0"

__all__ = [
    "BleuReport",
    "CoTSample",
    "DomainError",
    "EvalConfig",
    "EvalVerdict",
    "Language",
    "MockProvider",
    "Origin",
    "PipelineConfig",
    "PromptTemplate",
    "ProviderConfig",
    "Purpose",
    "Rationale",
    "RawSample",
    "ReviewAction",
    "ReviewDecision",
    "ReviewQueue",
    "RunReport",
    "Stage",
    "TaggedSample",
    "Violation",
    "advance_stage",
    "bleu",
    "count_tokens",
    "create_app",
    "detect_language",
    "emit",
    "evaluate",
    "export",
    "generate_rationale",
    "ingest",
    "parse",
    "rewrite_rationale",
    "run_stage12",
    "tokenize_for_bleu",
    "word_accuracy",
]
