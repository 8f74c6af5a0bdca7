"""Declarative run configuration: one TOML file, flags override values.

Secrets never live in the file; string values may reference environment
variables as ``${VAR}`` and are interpolated at load time. See README for
the full schema.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional

from .errors import ConfigError
from .evaluation import (
    DEFAULT_CONSISTENCY_RULES,
    DEFAULT_SEMANTIC_LEXICON,
    DEFAULT_VISUAL_LEXICON,
    EvalConfig,
    load_eval_config,
)
from .generation import (
    MockProvider,
    PromptTemplate,
    ProviderConfig,
    Purpose,
    RetryPolicy,
    builtin_template,
    load_template,
)

_ENV_RE = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def _interpolate(value):
    if isinstance(value, str):
        def sub(m):
            var = m.group(1)
            if var not in os.environ:
                raise ConfigError(f"environment variable {var} is not set")
            return os.environ[var]
        return _ENV_RE.sub(sub, value)
    if isinstance(value, dict):
        return {k: _interpolate(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_interpolate(v) for v in value]
    return value


@dataclass
class AppConfig:
    """Everything a CLI invocation needs, resolved and validated."""

    eval: EvalConfig = field(default_factory=EvalConfig)
    provider_kind: str = "mock"
    provider: ProviderConfig = field(default_factory=ProviderConfig)
    mock_script: Optional[str] = None
    generate_template: Optional[PromptTemplate] = None
    rewrite_template: Optional[PromptTemplate] = None
    max_rewrites: int = 3
    workers: int = 4
    store_path: str = "./store"
    run_id: str = "run"
    review_port: int = 8400
    review_lease_seconds: float = 300.0
    reviewers: Dict[str, str] = field(default_factory=dict)  # token -> reviewer id

    def build_provider_client(self):
        if self.provider_kind == "mock":
            script = {}
            if self.mock_script:
                return MockProvider.from_file(
                    self.mock_script,
                    retry=self.provider.retry,
                    max_parallel=self.provider.max_parallel,
                )
            return MockProvider(script, retry=self.provider.retry,
                                max_parallel=self.provider.max_parallel)
        if self.provider_kind == "http":
            from .generation import HttpChatProvider

            if not self.provider.endpoint:
                raise ConfigError("provider.endpoint is required for kind 'http'")
            return HttpChatProvider(self.provider)
        raise ConfigError(f"unknown provider kind '{self.provider_kind}'")


def load_config(path: Optional[str]) -> AppConfig:
    if path is None:
        return AppConfig()
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except Exception as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc

    data = _interpolate(raw)
    base = Path(path).parent

    def respath(p: Optional[str]) -> Optional[str]:
        if p is None:
            return None
        q = Path(p)
        return str(q if q.is_absolute() else base / q)

    cfg = AppConfig()

    prov = data.get("provider", {})
    retry = prov.get("retry", {})
    cfg.provider_kind = str(prov.get("kind", "mock"))
    cfg.provider = ProviderConfig(
        endpoint=str(prov.get("endpoint", "")),
        model_name=str(prov.get("model_name", "mock")),
        api_key_env=str(prov.get("api_key_env", "COTFORGE_API_KEY")),
        max_parallel=int(prov.get("max_parallel", 4)),
        timeout=float(prov.get("timeout_s", 30.0)),
        temperature=float(prov.get("temperature", 0.0)),
        retry=RetryPolicy(
            max_attempts=int(retry.get("max_attempts", 3)),
            base_backoff=float(retry.get("base_backoff_s", 0.5)),
        ),
    )
    cfg.mock_script = respath(prov.get("script"))

    ev = data.get("eval", {})
    if "lexicon_file" in ev:
        cfg.eval = load_eval_config(respath(ev["lexicon_file"]))
        if "l_max" in ev:
            from dataclasses import replace

            cfg.eval = replace(cfg.eval, l_max=int(ev["l_max"]))
    else:
        cfg.eval = EvalConfig(
            l_max=int(ev.get("l_max", 100)),
            visual_lexicon=tuple(ev.get("visual_lexicon", DEFAULT_VISUAL_LEXICON)),
            semantic_lexicon=tuple(ev.get("semantic_lexicon", DEFAULT_SEMANTIC_LEXICON)),
            consistency_rules=DEFAULT_CONSISTENCY_RULES,
        )

    tpl = data.get("templates", {})
    if "generate" in tpl:
        cfg.generate_template = load_template(respath(tpl["generate"]), Purpose.GENERATE)
    if "rewrite" in tpl:
        cfg.rewrite_template = load_template(respath(tpl["rewrite"]), Purpose.REWRITE)

    pipe = data.get("pipeline", {})
    cfg.max_rewrites = int(pipe.get("max_rewrites", 3))
    cfg.workers = int(pipe.get("workers", 4))
    cfg.store_path = respath(pipe.get("store_path")) or "./store"
    cfg.run_id = str(pipe.get("run_id", "run"))

    review = data.get("review", {})
    cfg.review_port = int(review.get("port", 8400))
    cfg.review_lease_seconds = float(review.get("lease_seconds", 300.0))
    reviewers = review.get("reviewers", {})
    if not isinstance(reviewers, dict):
        raise ConfigError("review.reviewers must map reviewer id -> token")
    cfg.reviewers = {str(token): str(rid) for rid, token in reviewers.items()}

    return cfg
