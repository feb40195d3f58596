"""Statistics store, query DSL, and temporally-guarded execution."""

from .engine import (
    MatchSummary,
    StatAnswer,
    ValidationResult,
    execute,
    validate_answers,
)
from .parser import parse_query
from .query import (
    GoalMethod,
    KNOWN_STATS,
    STAT_EVENT_KINDS,
    StatQuery,
    SubjectType,
    Verb,
    format_as_of,
    print_query,
    to_naive_utc,
)
from .store import (
    MatchRow,
    PlayerRow,
    StatEventRow,
    StatStore,
    dump_store,
    load_store,
    normalize_name,
    player_background,
)

__all__ = [
    "GoalMethod",
    "KNOWN_STATS",
    "MatchRow",
    "MatchSummary",
    "PlayerRow",
    "STAT_EVENT_KINDS",
    "StatAnswer",
    "StatEventRow",
    "StatQuery",
    "StatStore",
    "SubjectType",
    "ValidationResult",
    "Verb",
    "dump_store",
    "execute",
    "format_as_of",
    "load_store",
    "normalize_name",
    "parse_query",
    "player_background",
    "print_query",
    "to_naive_utc",
    "validate_answers",
]
