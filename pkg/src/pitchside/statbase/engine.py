"""Query execution with a strict as-of temporal guard, plus answer validation.

Only stat events from matches kicked off strictly before the query's
``as_of`` ever contribute, so inserting records dated at or after
``as_of`` can never change an answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from ..errors import UnknownEntity, UnsupportedStat
from .query import (
    GoalMethod,
    KNOWN_STATS,
    STAT_EVENT_KINDS,
    StatQuery,
    SubjectType,
    Verb,
    print_query,
    to_naive_utc,
)
from .store import MatchRow, StatStore, normalize_name


@dataclass(frozen=True, slots=True)
class MatchSummary:
    match_id: str
    home: str
    away: str
    kickoff: datetime
    score_home: int
    score_away: int
    league: str
    season: str


@dataclass(frozen=True, slots=True)
class StatAnswer:
    """Execution result: a count, a match list, or a (wins, draws, losses) triple.

    ``provenance`` lists the kickoffs of every match the answer drew on,
    which is what the temporal validity check inspects.
    """

    query: StatQuery
    count: int | None = None
    matches: tuple[MatchSummary, ...] | None = None
    record: tuple[int, int, int] | None = None
    provenance: tuple[datetime, ...] = ()

    def value_key(self):
        """Answer content without provenance; used for duplicate detection."""
        if self.count is not None:
            return ("count", self.count)
        if self.record is not None:
            return ("record", self.record)
        return ("matches", tuple((m.match_id, m.score_home, m.score_away)
                                 for m in self.matches or ()))

    def to_doc(self) -> dict:
        doc: dict = {"query": print_query(self.query)}
        if self.count is not None:
            doc["count"] = self.count
        if self.record is not None:
            doc["record"] = {"wins": self.record[0], "draws": self.record[1],
                             "losses": self.record[2]}
        if self.matches is not None:
            doc["matches"] = [
                {"match_id": m.match_id, "home": m.home, "away": m.away,
                 "kickoff": m.kickoff.isoformat(), "score": f"{m.score_home}-{m.score_away}",
                 "league": m.league, "season": m.season}
                for m in self.matches
            ]
        return doc


def _summary(row: MatchRow) -> MatchSummary:
    return MatchSummary(
        match_id=row.match_id, home=row.home, away=row.away, kickoff=row.kickoff,
        score_home=row.score_home, score_away=row.score_away,
        league=row.league, season=row.season,
    )


def _check_known_subject(store: StatStore, query: StatQuery, subject: str) -> None:
    # a completely empty table cannot vouch for anything; counts fall to 0
    if query.subject_type is SubjectType.PLAYER:
        if not store.players and not store.stat_events:
            return
        in_players = any(normalize_name(p.name) == subject for p in store.players)
        in_events = any(normalize_name(e.player) == subject for e in store.stat_events)
        if not (in_players or in_events):
            raise UnknownEntity(f"player {query.subject!r} is not in the store")
    else:
        if not store.matches:
            return
        in_matches = any(
            subject in (normalize_name(m.home), normalize_name(m.away))
            for m in store.matches
        )
        if not in_matches:
            raise UnknownEntity(f"team {query.subject!r} is not in the store")


def execute(store: StatStore, query: StatQuery) -> StatAnswer:
    """Answer a query from matches kicked off strictly before ``as_of``."""
    subject = normalize_name(query.subject)
    _check_known_subject(store, query, subject)

    eligible = {
        m.match_id: m
        for m in store.matches
        if m.kickoff < query.as_of
        and (query.season is None or m.season == query.season)
        and (query.league is None or m.league == query.league)
    }

    if query.verb is Verb.COUNT:
        if query.stat not in KNOWN_STATS:
            raise UnsupportedStat(f"statistic {query.stat!r} is outside the store schema")
        kinds = STAT_EVENT_KINDS[query.stat]
        hits = [
            e for e in store.stat_events
            if e.match_id in eligible
            and e.kind in kinds
            and (query.method is GoalMethod.ANY or e.method == query.method.value)
            and (
                normalize_name(e.player) == subject
                if query.subject_type is SubjectType.PLAYER
                else normalize_name(e.team) == subject
            )
        ]
        used = sorted({eligible[e.match_id].kickoff for e in hits})
        return StatAnswer(query=query, count=len(hits), provenance=tuple(used))

    involved = sorted(
        (m for m in eligible.values()
         if subject in (normalize_name(m.home), normalize_name(m.away))),
        key=lambda m: (m.kickoff, m.match_id),
    )
    if query.verb is Verb.LIST_MATCHES:
        return StatAnswer(
            query=query,
            matches=tuple(_summary(m) for m in involved),
            provenance=tuple(m.kickoff for m in involved),
        )
    if query.verb is Verb.TEAM_RECORD:
        wins = draws = losses = 0
        for m in involved:
            ours, theirs = (
                (m.score_home, m.score_away)
                if normalize_name(m.home) == subject
                else (m.score_away, m.score_home)
            )
            if ours > theirs:
                wins += 1
            elif ours == theirs:
                draws += 1
            else:
                losses += 1
        return StatAnswer(
            query=query,
            record=(wins, draws, losses),
            provenance=tuple(m.kickoff for m in involved),
        )
    # last n results, most recent first
    recent = list(reversed(involved))[: query.n]
    return StatAnswer(
        query=query,
        matches=tuple(_summary(m) for m in recent),
        provenance=tuple(m.kickoff for m in recent),
    )


@dataclass(frozen=True, slots=True)
class ValidationResult:
    kept: tuple[StatAnswer, ...]
    discarded: tuple[tuple[StatAnswer, str], ...]  # (answer, reason)


def validate_answers(
    answers, match_kickoff: datetime
) -> ValidationResult:
    """Drop duplicate answers and answers leaking matches from the future.

    An answer is discarded when (a) an earlier answer to the same query
    had the same content, or (b) its provenance includes any match that
    kicked off at or after the current match.
    """
    cutoff = to_naive_utc(match_kickoff)
    kept: list[StatAnswer] = []
    discarded: list[tuple[StatAnswer, str]] = []
    seen: set = set()
    for answer in answers:
        key = (print_query(answer.query), answer.value_key())
        if key in seen:
            discarded.append((answer, "duplicate"))
            continue
        if any(kickoff >= cutoff for kickoff in answer.provenance):
            discarded.append((answer, "temporal"))
            continue
        seen.add(key)
        kept.append(answer)
    return ValidationResult(kept=tuple(kept), discarded=tuple(discarded))
