"""Typed statistics queries and their canonical text rendering.

Queries carry a mandatory ``as_of`` timestamp; execution only ever sees
matches kicked off strictly before it, which keeps future results out
of any answer.  ``print_query`` renders the canonical DSL line and is
the inverse of :func:`pitchside.statbase.parser.parse_query`.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, time, timezone
from enum import Enum

from ..errors import SchemaError


class Verb(str, Enum):
    COUNT = "count"
    LIST_MATCHES = "list_matches"
    TEAM_RECORD = "team_record"
    LAST_N_RESULTS = "last_n_results"


class SubjectType(str, Enum):
    PLAYER = "player"
    TEAM = "team"


class GoalMethod(str, Enum):
    ANY = "any"
    PENALTY = "penalty"
    HEADER = "header"
    OWN_GOAL = "own_goal"


# statistics the store schema supports, mapped to stat-event kinds
STAT_EVENT_KINDS: dict[str, tuple[str, ...]] = {
    "goals": ("goal",),
    "assists": ("assist",),
    "yellow_cards": ("yellow_card",),
    "red_cards": ("red_card",),
    "cards_any": ("yellow_card", "red_card"),
    "fouls": ("foul",),
    "corners": ("corner",),
    "penalties_awarded": ("penalty_awarded",),
    "free_kicks": ("free_kick",),
}
KNOWN_STATS = frozenset(STAT_EVENT_KINDS)


def to_naive_utc(moment: datetime) -> datetime:
    """All temporal comparisons happen in naive UTC."""
    if moment.tzinfo is not None:
        moment = moment.astimezone(timezone.utc).replace(tzinfo=None)
    return moment


@dataclass(frozen=True, slots=True)
class StatQuery:
    """One query AST node.

    ``stat`` is an open string: unknown statistics still parse and
    print, and surface as UnsupportedStat at execution time so that a
    hallucinated statistic can be flagged as unverifiable downstream.
    """

    verb: Verb
    subject_type: SubjectType
    subject: str
    as_of: datetime
    stat: str | None = None
    method: GoalMethod = GoalMethod.ANY
    season: str | None = None
    league: str | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if not self.subject:
            raise SchemaError("query subject must be non-empty")
        object.__setattr__(self, "as_of", to_naive_utc(self.as_of))
        if self.verb is Verb.COUNT:
            if not self.stat:
                raise SchemaError("COUNT requires a statistic")
        else:
            if self.stat is not None:
                raise SchemaError(f"{self.verb.value} does not take a statistic")
            if self.subject_type is not SubjectType.TEAM:
                raise SchemaError(f"{self.verb.value} applies to teams only")
            if self.method is not GoalMethod.ANY:
                raise SchemaError("METHOD is only valid for COUNT queries")
        if self.verb is Verb.LAST_N_RESULTS:
            if self.n is None or self.n < 1:
                raise SchemaError("LAST n RESULTS requires a positive n")
        elif self.n is not None:
            raise SchemaError(f"{self.verb.value} does not take n")
        if self.season is not None and any(c.isspace() for c in self.season):
            raise SchemaError("season token must not contain whitespace")


def format_as_of(moment: datetime) -> str:
    if moment.time() == time(0, 0):
        return moment.date().isoformat()
    return moment.isoformat()


def print_query(query: StatQuery) -> str:
    """Render the canonical DSL line for a query."""
    parts: list[str]
    if query.verb is Verb.COUNT:
        parts = ["COUNT", query.stat, query.subject_type.name, f'"{query.subject}"']
        if query.method is not GoalMethod.ANY:
            parts += ["METHOD", query.method.value]
    elif query.verb is Verb.LIST_MATCHES:
        parts = ["LIST", "MATCHES", "TEAM", f'"{query.subject}"']
    elif query.verb is Verb.TEAM_RECORD:
        parts = ["RECORD", "TEAM", f'"{query.subject}"']
    else:
        parts = ["LAST", str(query.n), "RESULTS", "TEAM", f'"{query.subject}"']
    if query.season is not None:
        parts += ["SEASON", query.season]
    if query.league is not None:
        parts += ["LEAGUE", f'"{query.league}"']
    parts += ["BEFORE", format_as_of(query.as_of)]
    return " ".join(parts)
