"""Error taxonomy.

Every error that can escape the library carries a stable ``name`` equal to
its class name; the CLI prints that name on stderr and the review service
returns it in the ``error`` field, so scripts and the UI can match on it.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all expected, user-facing failures."""

    @property
    def name(self) -> str:
        return type(self).__name__


# -- core-model ---------------------------------------------------------

class IllegalTransition(DomainError):
    """Stage transition not permitted by the forward-only state machine."""


class MissingReview(DomainError):
    """Attempted entry into the final stage without a recorded decision."""


class InvalidDecision(DomainError):
    """Review decision violates its own invariants (empty note, no-op edit, ...)."""


# -- tagged-format ------------------------------------------------------

class ReservedTagInContent(DomainError):
    """Payload contains one of the four reserved tag literals."""


class MissingTag(DomainError):
    """A required tag pair is absent."""


class MalformedNesting(DomainError):
    """Tags duplicated, interleaved, or out of order."""


class TrailingGarbage(DomainError):
    """Non-whitespace content outside the tag pairs."""


# -- generation / provider ---------------------------------------------

class ProviderUnavailable(DomainError):
    """Text-generation provider failed after all retries."""


class EmptyCompletion(DomainError):
    """Provider returned an empty or whitespace-only completion."""


class JudgeUnavailable(DomainError):
    """LLM judge could not be reached; heuristic verdict was used instead."""


# -- pipeline / store ---------------------------------------------------

class SchemaViolation(DomainError):
    def __init__(self, line: int, field: str, detail: str = ""):
        self.line = line
        self.field = field
        msg = f"line {line}, field '{field}'"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DuplicateId(DomainError):
    def __init__(self, sample_id: str, line: int | None = None):
        self.sample_id = sample_id
        msg = f"duplicate sample id '{sample_id}'"
        if line is not None:
            msg += f" (line {line})"
        super().__init__(msg)


class StoreUnavailable(DomainError):
    """Store directory, run log, or referenced file cannot be read/written."""


class EmptyStage(DomainError):
    """Requested stage ledger holds no samples."""


# -- review-service -----------------------------------------------------

class VersionConflict(DomainError):
    """Compare-and-set failed: the submitted sample_version is stale."""


class Unauthorized(DomainError):
    """Missing or unknown reviewer token."""


class UnknownItem(DomainError):
    """No queue item with the given id."""


# -- metrics ------------------------------------------------------------

class LengthMismatch(DomainError):
    """Hypothesis and reference lists differ in length."""


class EmptyCorpus(DomainError):
    """Scoring requires at least one hypothesis/reference pair."""


# -- configuration ------------------------------------------------------

class ConfigError(DomainError):
    """Configuration file missing, malformed, or referencing an unset variable."""
