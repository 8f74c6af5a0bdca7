import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# The worked example from the source corpus: answer and its reasoning chain.
LOVEL_ANSWER = "LOVEL"
LOVEL_THINKING = (
    '"LOVEL" could be a stylized version of "LOVE" or a misspelling of "NOVEL". '
    'The letters "L", "O", "V", "E", and "L" are clearly present.  '
    'Lookalike words such as "LEVEL" or "LOVELY" are considered but ruled out '
    "due to differences in letter count and semantic context."
)
LOVEL_TAGGED = f"<answer>{LOVEL_ANSWER}</answer><thinking>{LOVEL_THINKING}</thinking>"


def passing_thinking(answer: str) -> str:
    """A rationale that clears the default gate for the given answer."""
    return (f'The letter shapes point to "{answer}" and no lookalike candidate '
            f'fits better. In context "{answer}" is plausible and the meaning fits.')


def failing_thinking(answer: str) -> str:
    """Misses visual-form analysis; fails only that check."""
    return f'In context "{answer}" is plausible and the meaning fits.'


def tagged_completion(answer: str, thinking: str) -> str:
    return f"<answer>{answer}</answer><thinking>{thinking}</thinking>"


def write_corpus(path: Path, answers, prefix: str = "s") -> Path:
    with open(path, "w", encoding="utf-8") as fh:
        for i, answer in enumerate(answers):
            fh.write(json.dumps({
                "id": f"{prefix}{i:04d}",
                "image_ref": f"images/{prefix}{i:04d}.png",
                "answer": answer,
            }, ensure_ascii=False) + "\n")
    return path


def echo_script(answers, rewrite_after=(), latency: float = 0.0) -> dict:
    """Mock script: every answer passes; those in rewrite_after fail once
    (missing visual analysis) and pass after one rewrite."""
    entries = {}
    for answer in rewrite_after:
        entries[answer] = {
            "completion": tagged_completion(answer, failing_thinking(answer)),
            "rewrite_completion": tagged_completion(answer, passing_thinking(answer)),
        }
    script = {
        "latency": latency,
        "entries": entries,
        "default": {"completion": "<answer>{answer}</answer><thinking>"
                                  + passing_thinking("{answer}") + "</thinking>"},
    }
    del answers
    return script


@pytest.fixture
def store_dir(tmp_path):
    d = tmp_path / "store"
    d.mkdir()
    return str(d)
