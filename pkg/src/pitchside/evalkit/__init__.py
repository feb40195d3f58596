"""Metrics and verification: alignment accuracy, claim checking, tallies."""

from .alignment import (
    AccuracyReport,
    AccuracySplit,
    PredictionRecord,
    RecordVariant,
    alignment_accuracy,
    load_prediction_records,
)
from .claims import (
    Claim,
    ClaimContext,
    ClaimKind,
    NUMBER_WORDS,
    external_claim,
    extract_claims,
)
from .structure import CATEGORIES, StructuralTally, structural_tally
from .verify import (
    CLAIM_EVENT_KINDS,
    Verdict,
    VerdictStatus,
    VerdictSummary,
    summarize_verdicts,
    verify_claims,
)

__all__ = [
    "AccuracyReport",
    "AccuracySplit",
    "CATEGORIES",
    "CLAIM_EVENT_KINDS",
    "Claim",
    "ClaimContext",
    "ClaimKind",
    "NUMBER_WORDS",
    "PredictionRecord",
    "RecordVariant",
    "StructuralTally",
    "Verdict",
    "VerdictStatus",
    "VerdictSummary",
    "alignment_accuracy",
    "external_claim",
    "extract_claims",
    "load_prediction_records",
    "structural_tally",
    "summarize_verdicts",
    "verify_claims",
]
