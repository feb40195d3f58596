"""Exception hierarchy shared by all pitchside subsystems.

Every error carries a stable ``kind`` string so the CLI can emit
machine-readable error documents and map errors to exit codes.
"""

from __future__ import annotations


class PitchsideError(Exception):
    """Base class for all pitchside errors."""

    kind = "error"

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.context = context

    def to_doc(self) -> dict:
        doc = {"kind": self.kind, "message": str(self)}
        if self.context:
            doc["context"] = {k: repr(v) for k, v in self.context.items()}
        return doc


class SchemaError(PitchsideError):
    """A document does not match its declared file schema."""

    kind = "schema_error"


# --- match-state machine ---------------------------------------------------

class ClockRegression(PitchsideError):
    kind = "clock_regression"


class SubstitutionViolation(PitchsideError):
    kind = "substitution_violation"


class ActorNotInLineup(PitchsideError):
    kind = "actor_not_in_lineup"


class FixtureMismatch(PitchsideError):
    kind = "fixture_mismatch"


# --- frame grounding -------------------------------------------------------

class DimensionMismatch(PitchsideError):
    kind = "dimension_mismatch"


class AllZeroNorms(PitchsideError):
    kind = "all_zero_norms"


# --- scene analysis --------------------------------------------------------

class EmptySequence(PitchsideError):
    kind = "empty_sequence"


class CandidateNotInLineup(PitchsideError):
    kind = "candidate_not_in_lineup"


class LengthMismatch(PitchsideError):
    kind = "length_mismatch"


class InvalidJerseyRecord(PitchsideError):
    kind = "invalid_jersey_record"


# --- statistics store and query DSL ----------------------------------------

class QuerySyntaxError(PitchsideError):
    """DSL text does not parse; ``position`` is a 0-based character offset."""

    kind = "query_syntax_error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MissingBefore(PitchsideError):
    """The mandatory BEFORE temporal clause is absent."""

    kind = "missing_before"


class UnknownEntity(PitchsideError):
    kind = "unknown_entity"


class DuplicateEntity(PitchsideError):
    kind = "duplicate_entity"


class UnsupportedStat(PitchsideError):
    """The queried statistic is outside the store schema."""

    kind = "unsupported_stat"


# --- pipeline --------------------------------------------------------------

class UnresolvedPlaceholder(PitchsideError):
    kind = "unresolved_placeholder"


class MalformedResponse(PitchsideError):
    kind = "malformed_response"


class UnknownOption(PitchsideError):
    kind = "unknown_option"


class ClientError(PitchsideError):
    kind = "client_error"


class WrongQuestionCount(PitchsideError):
    kind = "wrong_question_count"


class CorruptStore(PitchsideError):
    """Two different responses share one request digest."""

    kind = "corrupt_store"


# --- evaluation ------------------------------------------------------------

class EmptyInput(PitchsideError):
    kind = "empty_input"


class UnlabeledSentence(PitchsideError):
    kind = "unlabeled_sentence"
