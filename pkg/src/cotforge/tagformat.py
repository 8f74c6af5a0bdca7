"""Strict serializer and parser for the two-pair tagged sample encoding.

A well-formed string is exactly

    <answer>PAYLOAD</answer><thinking>PAYLOAD</thinking>

with optional whitespace outside the pairs. Tags are lowercase, attribute-
free, and case-sensitive; payloads may contain any Unicode except the four
reserved literals (no escaping exists, so offending content is rejected).
Parsing is a single left-to-right scan.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedNesting, MissingTag, ReservedTagInContent, TrailingGarbage

ANSWER_OPEN = "<answer>"
ANSWER_CLOSE = "</answer>"
THINKING_OPEN = "<thinking>"
THINKING_CLOSE = "</thinking>"

RESERVED_TAGS = (ANSWER_OPEN, ANSWER_CLOSE, THINKING_OPEN, THINKING_CLOSE)

_TAG_RE = re.compile(r"</?(?:answer|thinking)>")
_EXPECTED = [ANSWER_OPEN, ANSWER_CLOSE, THINKING_OPEN, THINKING_CLOSE]


@dataclass(frozen=True)
class TaggedSample:
    answer: str
    thinking: str


def contains_reserved_tag(text: str) -> bool:
    return any(tag in text for tag in RESERVED_TAGS)


def emit(answer: str, thinking: str) -> str:
    """Serialize the canonical form: no added whitespace anywhere."""
    for name, text in (("answer", answer), ("thinking", thinking)):
        if contains_reserved_tag(text):
            raise ReservedTagInContent(f"{name} payload contains a reserved tag literal")
    return f"{ANSWER_OPEN}{answer}{ANSWER_CLOSE}{THINKING_OPEN}{thinking}{THINKING_CLOSE}"


def parse(s: str) -> TaggedSample:
    """Extract the two payloads from a tagged string.

    Whitespace outside the tag pairs is tolerated; any other deviation
    raises MissingTag, MalformedNesting, or TrailingGarbage.
    """
    tokens = [(m.group(), m.start(), m.end()) for m in _TAG_RE.finditer(s)]
    names = [t[0] for t in tokens]
    if names != _EXPECTED:
        for tag in _EXPECTED:
            if tag not in names:
                raise MissingTag(f"missing {tag}")
        raise MalformedNesting("tags duplicated or out of order")

    (_, ao_start, ao_end), (_, ac_start, ac_end), \
        (_, to_start, to_end), (_, tc_start, tc_end) = tokens

    if s[:ao_start].strip():
        raise TrailingGarbage(f"unexpected content before {ANSWER_OPEN}")
    if s[ac_end:to_start].strip():
        raise TrailingGarbage(f"unexpected content between {ANSWER_CLOSE} and {THINKING_OPEN}")
    if s[tc_end:].strip():
        raise TrailingGarbage(f"unexpected content after {THINKING_CLOSE}")

    return TaggedSample(answer=s[ao_end:ac_start], thinking=s[to_end:tc_start])
