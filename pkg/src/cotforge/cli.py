"""Single entry point for every workflow.

Exit codes: 0 success, 1 domain error (the error taxonomy name is printed
to stderr), 2 usage error. All commands honor --config and --store.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import List, Optional

from .config import AppConfig, load_config
from .errors import DomainError
from .evaluation import count_tokens, evaluate
from .lang import Language
from .metrics import bleu, read_predictions, word_accuracy
from .model import Rationale, RawSample, Origin
from .pipeline import (
    PipelineConfig,
    export,
    ingest,
    run_stage12,
    validate_dataset,
)
from .store import load_state


def _app_config(args) -> AppConfig:
    cfg = load_config(getattr(args, "config", None))
    if getattr(args, "store", None):
        cfg.store_path = args.store
    if getattr(args, "run_id", None):
        cfg.run_id = args.run_id
    return cfg


def _pipeline_config(cfg: AppConfig) -> PipelineConfig:
    return PipelineConfig(
        eval=cfg.eval,
        provider=cfg.build_provider_client(),
        generate_template=cfg.generate_template,
        rewrite_template=cfg.rewrite_template,
        max_rewrites=cfg.max_rewrites,
        workers=cfg.workers,
        store_path=cfg.store_path,
        run_id=cfg.run_id,
    )


def cmd_ingest(args) -> int:
    samples = ingest(args.corpus)
    languages = Counter(s.language.value for s in samples)
    print(f"ingested {len(samples)} samples from {args.corpus}")
    for lang, n in sorted(languages.items()):
        print(f"  {lang}: {n}")
    return 0


def cmd_run(args) -> int:
    cfg = _app_config(args)
    samples = ingest(args.corpus)
    report = run_stage12(samples, _pipeline_config(cfg))
    print(json.dumps(report.to_dict(), indent=2))
    return 0


def cmd_export(args) -> int:
    cfg = _app_config(args)
    state = load_state(cfg.store_path, cfg.run_id)
    count = export(state, args.stage, args.format, args.out, cfg.run_id)
    print(f"exported {count} records to {args.out}")
    return 0


def cmd_eval_one(args) -> int:
    cfg = _app_config(args)
    if args.text is not None:
        text = args.text
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    sample = RawSample.create(id="adhoc", image_ref="", answer=args.answer)
    origin = Origin.GENERATED if args.revision == 0 else Origin.REWRITTEN
    verdict = evaluate(Rationale(text=text, revision=args.revision, origin=origin),
                       sample, cfg.eval)
    print(json.dumps({
        "passed": verdict.passed,
        "violations": sorted(v.value for v in verdict.violations),
        "token_count": verdict.token_count,
        "l_max": cfg.eval.l_max,
    }, indent=2))
    return 0


def _dataset_references(path: str) -> dict:
    refs = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            refs[str(rec["id"])] = str(rec["answer"])
    return refs


def cmd_score(args) -> int:
    from .errors import StoreUnavailable
    from .lang import detect_language
    import os

    if not os.path.exists(args.ref):
        raise StoreUnavailable(f"cannot read references {args.ref}: file not found")
    predictions = read_predictions(args.pred)
    references = _dataset_references(args.ref)
    missing = sorted(set(references) - set(predictions))
    if missing:
        raise StoreUnavailable(
            f"predictions missing for {len(missing)} reference ids (first: {missing[0]})")
    ids = sorted(references)
    hyps = [predictions[i] for i in ids]
    refs = [references[i] for i in ids]

    if args.language == "auto":
        language = detect_language("".join(refs))
    else:
        language = Language(args.language)

    report = bleu(hyps, refs, language)
    accuracy = word_accuracy(hyps, refs)
    out = report.to_dict()
    out["word_accuracy"] = accuracy
    out["language"] = language.value
    out["pairs"] = len(ids)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(report.table())
        print(f"accuracy  {accuracy:.4f}")
        print(f"pairs     {len(ids)}  language={language.value}")
    return 0


def cmd_review_serve(args) -> int:
    import uvicorn

    from .review import ReviewQueue, create_app
    from .store import EventLog, replay

    cfg = _app_config(args)
    log = EventLog.for_run(cfg.store_path, cfg.run_id)
    state = replay(log.read())
    queue = ReviewQueue(log, state, cfg.eval, lease_seconds=cfg.review_lease_seconds)
    tokens = dict(cfg.reviewers)
    if args.token:
        from .errors import ConfigError

        for pair in args.token:
            reviewer, _, token = pair.partition(":")
            if not token:
                raise ConfigError(f"--token expects reviewer:token, got '{pair}'")
            tokens[token] = reviewer
    app = create_app(queue, tokens, store_path=cfg.store_path, run_id=cfg.run_id,
                     static_dir=args.ui_dir)
    print(f"review service for run '{cfg.run_id}' on port {args.port or cfg.review_port} "
          f"({queue.intake} items)")
    uvicorn.run(app, host=args.host, port=args.port or cfg.review_port, log_level="warning")
    return 0


def cmd_stats(args) -> int:
    cfg = _app_config(args)
    state = load_state(cfg.store_path, cfg.run_id)
    counts = state.counts()
    languages = Counter(r.raw.language.value for r in state.samples.values())
    rewrites = Counter()
    violations = Counter()
    for rec in state.samples.values():
        if rec.terminal_stage12 and rec.rationale is not None:
            rewrites[(rec.d2_rationale or rec.rationale).revision] += 1
        for v in rec.verdicts:
            for viol in v.violations:
                violations[viol.value] += 1
    print(json.dumps({
        "run_id": cfg.run_id,
        "ingested": len(state.samples),
        "counts": counts,
        "rewrite_histogram": {str(k): v for k, v in sorted(rewrites.items())},
        "violation_histogram": dict(sorted(violations.items())),
        "languages": dict(sorted(languages.items())),
    }, indent=2))
    return 0


def cmd_validate(args) -> int:
    count = validate_dataset(args.dataset)
    print(f"{args.dataset}: {count} records valid")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cotforge",
        description="Staged chain-of-thought dataset construction and scoring.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--config", help="TOML config file")
        p.add_argument("--store", help="store directory (overrides config)")
        p.add_argument("--run-id", dest="run_id", help="run id (overrides config)")

    p = sub.add_parser("ingest", help="validate a raw corpus and report language counts")
    p.add_argument("--corpus", required=True, help="line-delimited {id,image_ref,answer} file")
    common(p)

    p = sub.add_parser("run", help="run generation + automatic gating for a corpus")
    p.add_argument("--corpus", required=True)
    common(p)

    p = sub.add_parser("export", help="export a stage ledger as a dataset file")
    p.add_argument("--stage", required=True, choices=["d1", "d2", "d3", "quarantined"])
    p.add_argument("--format", default="jsonl", choices=["jsonl", "json"])
    p.add_argument("--out", required=True)
    common(p)

    p = sub.add_parser("eval-one", help="evaluate a single rationale against the gate")
    p.add_argument("--answer", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--text", help="rationale text")
    g.add_argument("--file", help="file holding the rationale text")
    p.add_argument("--revision", type=int, default=0)
    common(p)

    p = sub.add_parser("score", help="score predictions against exported references")
    p.add_argument("--pred", required=True, help="line-delimited {id,prediction} file")
    p.add_argument("--ref", required=True, help="exported dataset file")
    p.add_argument("--language", default="auto", choices=["auto", "latin", "cjk", "mixed"])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    common(p)

    p = sub.add_parser("review-serve", help="serve the expert review queue over HTTP")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=0, help="defaults to the config value")
    p.add_argument("--token", action="append", default=[],
                   help="reviewer:token pair (repeatable; adds to config reviewers)")
    p.add_argument("--ui-dir", dest="ui_dir", help="static directory for the review UI")
    common(p)

    p = sub.add_parser("stats", help="report stage counts and histograms for a run")
    common(p)

    p = sub.add_parser("validate", help="validate an exported dataset file")
    p.add_argument("--dataset", required=True)
    common(p)

    return ap


_COMMANDS = {
    "ingest": cmd_ingest,
    "run": cmd_run,
    "export": cmd_export,
    "eval-one": cmd_eval_one,
    "score": cmd_score,
    "review-serve": cmd_review_serve,
    "stats": cmd_stats,
    "validate": cmd_validate,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args)
    except DomainError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"StoreUnavailable: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
