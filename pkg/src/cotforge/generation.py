"""Rationale generation and rewriting against a pluggable completion provider.

The wire contract is the minimal chat-completion shape: POST a JSON body
{model, messages, temperature} and read back {text}. Credentials come only
from the environment variable named in the config. A script-driven mock
provider satisfies the same interface so the whole pipeline runs offline;
it keys on the ``Answer:`` line that the shipped templates embed in every
prompt, making its output a pure function of the prompt.
"""

from __future__ import annotations

import enum
import json
import threading
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, Optional

import requests

from .errors import (
    ConfigError,
    DomainError,
    EmptyCompletion,
    ProviderUnavailable,
    ReservedTagInContent,
)
from .model import EvalVerdict, Origin, Rationale, RawSample
from . import tagformat

DEFAULT_SYSTEM_PROMPT = (
    "You explain scene-text recognition results. Given the recognized answer, "
    "produce a concise reasoning chain that analyzes both visual similarity "
    "(letter shapes, lookalike candidates) and semantic coherence (meaning, "
    "context, plausibility)."
)

ANSWER_MARKER = "Answer: "
FEEDBACK_MARKER = "Problems found: "

# Fallback completion for a script-less mock: passes the default gate for
# ordinary answers (visual + semantic terms, answer quoted verbatim).
DEFAULT_MOCK_COMPLETION = (
    '<answer>{answer}</answer><thinking>The letter shapes match "{answer}" '
    'cleanly and no lookalike candidate fits better. In context, "{answer}" '
    "is the plausible meaning, so the reading makes sense.</thinking>"
)


class Purpose(str, enum.Enum):
    GENERATE = "generate"
    REWRITE = "rewrite"


_REQUIRED_PLACEHOLDERS = {
    Purpose.GENERATE: ("{answer}",),
    Purpose.REWRITE: ("{answer}", "{feedback}", "{prior_rationale}"),
}


@dataclass(frozen=True)
class PromptTemplate:
    name: str
    body: str
    purpose: Purpose

    def __post_init__(self):
        for ph in _REQUIRED_PLACEHOLDERS[self.purpose]:
            if ph not in self.body:
                raise ConfigError(f"template '{self.name}' must reference {ph}")

    def render(self, answer: str, feedback: str = "", prior_rationale: str = "") -> str:
        # Literal replacement keeps any other braces in the body intact.
        return (self.body
                .replace("{answer}", answer)
                .replace("{feedback}", feedback)
                .replace("{prior_rationale}", prior_rationale))


def builtin_template(purpose: Purpose) -> PromptTemplate:
    name = f"builtin-{purpose.value}"
    body = resources.files("cotforge.templates").joinpath(f"{purpose.value}.txt").read_text("utf-8")
    return PromptTemplate(name=name, body=body, purpose=purpose)


def load_template(path: str, purpose: Purpose) -> PromptTemplate:
    try:
        body = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read template {path}: {exc}") from exc
    return PromptTemplate(name=Path(path).name, body=body, purpose=purpose)


@dataclass(frozen=True)
class RetryPolicy:
    max_attempts: int = 3
    base_backoff: float = 0.5

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str = ""
    model_name: str = "mock"
    api_key_env: str = "COTFORGE_API_KEY"
    max_parallel: int = 4
    timeout: float = 30.0
    temperature: float = 0.0
    retry: RetryPolicy = field(default_factory=RetryPolicy)

    def __post_init__(self):
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be >= 1")


class TransientProviderError(Exception):
    """Internal: one attempt failed; the retry loop decides what happens next."""


def _with_retry(policy: RetryPolicy, attempt_fn: Callable[[], str],
                sleep: Callable[[float], None]) -> str:
    last: Optional[Exception] = None
    for attempt in range(1, policy.max_attempts + 1):
        try:
            return attempt_fn()
        except TransientProviderError as exc:
            last = exc
            if attempt < policy.max_attempts:
                sleep(policy.base_backoff * 2 ** (attempt - 1))
    raise ProviderUnavailable(f"provider failed after {policy.max_attempts} attempts: {last}")


class HttpChatProvider:
    """Minimal chat-completion client with bounded parallelism and backoff."""

    def __init__(self, config: ProviderConfig, session: Optional[requests.Session] = None,
                 sleep: Callable[[float], None] = time.sleep):
        self.config = config
        self._session = session or requests.Session()
        self._sleep = sleep
        self._slots = threading.BoundedSemaphore(config.max_parallel)

    def complete(self, system: str, user: str) -> str:
        return _with_retry(self.config.retry, lambda: self._attempt(system, user), self._sleep)

    def _attempt(self, system: str, user: str) -> str:
        import os

        headers = {"Content-Type": "application/json"}
        key = os.environ.get(self.config.api_key_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        body = {
            "model": self.config.model_name,
            "messages": [
                {"role": "system", "content": system},
                {"role": "user", "content": user},
            ],
            "temperature": self.config.temperature,
        }
        with self._slots:
            try:
                resp = self._session.post(self.config.endpoint, json=body,
                                          headers=headers, timeout=self.config.timeout)
            except requests.RequestException as exc:
                raise TransientProviderError(str(exc)) from exc
        if resp.status_code >= 500 or resp.status_code == 429:
            raise TransientProviderError(f"HTTP {resp.status_code}")
        if resp.status_code != 200:
            raise ProviderUnavailable(f"HTTP {resp.status_code}: {resp.text[:200]}")
        try:
            return str(resp.json()["text"])
        except (ValueError, KeyError) as exc:
            raise ProviderUnavailable(f"malformed provider response: {exc}") from exc


class MockProvider:
    """Offline provider driven by a script: answer -> canned completions.

    Script shape::

        {
          "latency": 0.0,
          "entries": {
            "LOVEL": {"completion": "...", "rewrite_completion": "...",
                       "fail_times": 0, "error": null}
          },
          "default": {"completion": "... {answer} ...",
                      "rewrite_completion": "... {answer} ..."}
        }

    Completions are a pure function of the rendered prompt (the answer is
    recovered from the ``Answer:`` marker line), so repeated runs are
    byte-identical. ``fail_times``/``error`` simulate transient and
    permanent provider failures for testing.
    """

    def __init__(self, script: Dict, retry: Optional[RetryPolicy] = None,
                 max_parallel: int = 4, sleep: Callable[[float], None] = time.sleep):
        self.script = script
        self.retry = retry or RetryPolicy()
        self._sleep = sleep
        self._slots = threading.BoundedSemaphore(max_parallel)
        self._lock = threading.Lock()
        self._fail_budget: Dict[str, int] = {}
        self.calls = 0
        self.in_flight = 0
        self.max_in_flight = 0

    @classmethod
    def from_file(cls, path: str, **kwargs) -> "MockProvider":
        try:
            script = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read mock script {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed mock script {path}: {exc}") from exc
        return cls(script, **kwargs)

    def complete(self, system: str, user: str) -> str:
        del system
        return _with_retry(self.retry, lambda: self._attempt(user), self._sleep)

    def _attempt(self, user: str) -> str:
        with self._lock:
            self.calls += 1
        with self._slots:
            with self._lock:
                self.in_flight += 1
                self.max_in_flight = max(self.max_in_flight, self.in_flight)
            try:
                latency = float(self.script.get("latency", 0.0))
                if latency:
                    time.sleep(latency)
                return self._reply(user)
            finally:
                with self._lock:
                    self.in_flight -= 1

    def _reply(self, user: str) -> str:
        answer = ""
        for line in user.splitlines():
            if line.startswith(ANSWER_MARKER):
                answer = line[len(ANSWER_MARKER):].strip()
                break
        is_rewrite = FEEDBACK_MARKER in user

        entry = self.script.get("entries", {}).get(answer)
        if entry is not None:
            if entry.get("error"):
                raise TransientProviderError(f"scripted failure for '{answer}'")
            fail_times = int(entry.get("fail_times", 0))
            if fail_times:
                with self._lock:
                    used = self._fail_budget.get(answer, 0)
                    if used < fail_times:
                        self._fail_budget[answer] = used + 1
                        raise TransientProviderError(
                            f"scripted transient failure {used + 1}/{fail_times}")
            key = "rewrite_completion" if is_rewrite else "completion"
            if key in entry:
                return str(entry[key])

        default = self.script.get("default", {})
        key = "rewrite_completion" if is_rewrite else "completion"
        template = default.get(key, default.get("completion", DEFAULT_MOCK_COMPLETION))
        return str(template).replace("{answer}", answer)


def build_provider_client(provider) -> object:
    """Accept a ready client (anything with .complete) or a ProviderConfig."""
    if hasattr(provider, "complete"):
        return provider
    if isinstance(provider, ProviderConfig):
        return HttpChatProvider(provider)
    raise TypeError(f"cannot build a provider client from {provider!r}")


def _extract_thinking(completion: str) -> str:
    """Providers may echo the full tagged form or reply with bare text."""
    text = completion.strip()
    if not text:
        raise EmptyCompletion("provider returned an empty completion")
    try:
        parsed = tagformat.parse(text)
        text = parsed.thinking.strip()
    except DomainError:
        pass
    if not text:
        raise EmptyCompletion("provider returned an empty thinking payload")
    if tagformat.contains_reserved_tag(text):
        exc = ReservedTagInContent("completion quotes a reserved tag literal")
        exc.payload = text  # lets the pipeline feed it straight to the rewriter
        raise exc
    return text


def generate_rationale(sample: RawSample, template: PromptTemplate, provider) -> Rationale:
    """Stage-1 generation: returns a revision-0 rationale."""
    if template.purpose is not Purpose.GENERATE:
        raise ValueError("generate_rationale requires a Generate template")
    client = build_provider_client(provider)
    completion = client.complete(DEFAULT_SYSTEM_PROMPT, template.render(answer=sample.answer))
    return Rationale(text=_extract_thinking(completion), revision=0, origin=Origin.GENERATED)


def rewrite_rationale(sample: RawSample, prior: Rationale, verdict: EvalVerdict,
                      template: PromptTemplate, provider) -> Rationale:
    """Stage-2 rewrite: feeds the verdict's violations back as feedback."""
    if verdict.passed:
        raise ValueError("rewrite_rationale requires a failing verdict")
    if template.purpose is not Purpose.REWRITE:
        raise ValueError("rewrite_rationale requires a Rewrite template")
    from .evaluation import render_feedback

    client = build_provider_client(provider)
    prompt = template.render(answer=sample.answer,
                             feedback=render_feedback(verdict),
                             prior_rationale=prior.text)
    completion = client.complete(DEFAULT_SYSTEM_PROMPT, prompt)
    return Rationale(text=_extract_thinking(completion),
                     revision=prior.revision + 1, origin=Origin.REWRITTEN)
