"""Claim verification against replayed state and the statistics store.

Scorelines are compared to the replayed score; the swapped orientation
is also accepted (and noted) unless strict mode is on, since commentary
rarely says which side is first.  Event counts are compared to the
number of matching events up to and including the current one.
External statistics execute through the query engine; anything outside
the schema (ball possession, say) is unverifiable rather than wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from ..errors import PitchsideError, UnknownEntity, UnsupportedStat
from ..events.types import (
    CARD_KINDS,
    EventKind,
    GameState,
    MatchEvent,
    MatchMeta,
    SCORING_KINDS,
)
from ..statbase.engine import execute
from ..statbase.parser import parse_query
from ..statbase.store import StatStore, normalize_name
from .claims import Claim, ClaimKind


class VerdictStatus(str, Enum):
    SUPPORTED = "supported"
    CONTRADICTED = "contradicted"
    UNVERIFIABLE = "unverifiable"


@dataclass(frozen=True, slots=True)
class Verdict:
    claim: Claim
    status: VerdictStatus
    expected: str | None = None
    claimed: str | None = None
    note: str | None = None


CLAIM_EVENT_KINDS: dict[str, frozenset[EventKind]] = {
    "goal": SCORING_KINDS,
    "yellow_card": frozenset({EventKind.YELLOW_CARD}),
    "red_card": frozenset({EventKind.RED_CARD}),
    "card": CARD_KINDS,
    "corner": frozenset({EventKind.CORNER}),
    "foul": frozenset({EventKind.FOUL}),
    "free_kick": frozenset({EventKind.FREE_KICK}),
    "offside": frozenset({EventKind.OFFSIDE}),
    "penalty": frozenset({EventKind.PENALTY_AWARDED}),
}


def _verify_scoreline(claim: Claim, state: GameState, strict: bool) -> Verdict:
    claimed = claim.score
    actual = (state.score_home, state.score_away)
    expected_text = f"{actual[0]}-{actual[1]}"
    claimed_text = f"{claimed[0]}-{claimed[1]}"
    if claimed == actual:
        return Verdict(claim, VerdictStatus.SUPPORTED, expected_text,
                       claimed_text, note="home-away orientation")
    if claimed == actual[::-1] and not strict:
        return Verdict(claim, VerdictStatus.SUPPORTED, expected_text,
                       claimed_text, note="swapped orientation")
    return Verdict(claim, VerdictStatus.CONTRADICTED, expected_text, claimed_text)


def _verify_count(
    claim: Claim,
    state: GameState,
    events: Sequence[MatchEvent],
    meta: MatchMeta | None,
) -> Verdict:
    kinds = CLAIM_EVENT_KINDS[claim.event_kind]
    if claim.team is not None and meta is None:
        return Verdict(claim, VerdictStatus.UNVERIFIABLE,
                       claimed=str(claim.count),
                       note="team-scoped claim but no team mapping supplied")
    total = 0
    for event in events:
        if event.kind not in kinds or event.clock > state.clock:
            continue
        if claim.team is not None:
            team_name = meta.team(event.team).team_name
            if normalize_name(team_name) != normalize_name(claim.team):
                continue
        if claim.player is not None:
            if event.actor is None or \
                    normalize_name(event.actor.name) != normalize_name(claim.player):
                continue
        total += 1
    status = (VerdictStatus.SUPPORTED if total == claim.count
              else VerdictStatus.CONTRADICTED)
    scope = claim.team or claim.player
    return Verdict(claim, status, expected=str(total), claimed=str(claim.count),
                   note=f"scope: {scope}" if scope else None)


def _verify_external(claim: Claim, store: StatStore | None) -> Verdict:
    if store is None:
        return Verdict(claim, VerdictStatus.UNVERIFIABLE,
                       claimed=claim.claimed_value, note="no statistics store")
    try:
        query = parse_query(claim.query_text)
    except PitchsideError as error:
        return Verdict(claim, VerdictStatus.UNVERIFIABLE,
                       claimed=claim.claimed_value, note=f"query error: {error}")
    try:
        answer = execute(store, query)
    except UnsupportedStat:
        return Verdict(claim, VerdictStatus.UNVERIFIABLE,
                       claimed=claim.claimed_value, note="stat outside the schema")
    except UnknownEntity as error:
        return Verdict(claim, VerdictStatus.UNVERIFIABLE,
                       claimed=claim.claimed_value, note=str(error))
    if answer.count is not None:
        expected = str(answer.count)
        try:
            matches = int(str(claim.claimed_value).strip()) == answer.count
        except ValueError:
            matches = False
    elif answer.record is not None:
        expected = "-".join(str(v) for v in answer.record)
        matches = str(claim.claimed_value).strip() == expected
    else:
        expected = ";".join(m.match_id for m in answer.matches or ())
        matches = str(claim.claimed_value).strip() == expected
    status = VerdictStatus.SUPPORTED if matches else VerdictStatus.CONTRADICTED
    return Verdict(claim, status, expected=expected, claimed=claim.claimed_value)


def verify_claims(
    claims: Iterable[Claim],
    state: GameState,
    store: StatStore | None = None,
    events: Sequence[MatchEvent] | None = None,
    meta: MatchMeta | None = None,
    *,
    strict_scoreline: bool = False,
) -> list[Verdict]:
    """Verdicts for the claims, given state replayed to the claim clock.

    ``state`` must include the current event (inclusive replay) so that
    ordinal counts of that event see it.  ``events`` supplies the full
    match event list for counting kinds that are not key events (corners,
    fouls); it defaults to the state's key-event timeline.  Events after
    the state clock never affect any verdict.
    """
    event_list = tuple(events) if events is not None else state.key_events
    verdicts = []
    for claim in claims:
        if claim.kind is ClaimKind.SCORELINE:
            verdicts.append(_verify_scoreline(claim, state, strict_scoreline))
        elif claim.kind is ClaimKind.ORDINAL_EVENT_COUNT:
            verdicts.append(_verify_count(claim, state, event_list, meta))
        else:
            verdicts.append(_verify_external(claim, store))
    return verdicts


@dataclass(frozen=True, slots=True)
class VerdictSummary:
    """Accuracy split into goal-related claims and everything else."""

    goal_supported: int
    goal_contradicted: int
    other_supported: int
    other_contradicted: int
    unverifiable: int

    @property
    def goal_accuracy(self) -> float | None:
        checked = self.goal_supported + self.goal_contradicted
        return 100.0 * self.goal_supported / checked if checked else None

    @property
    def other_accuracy(self) -> float | None:
        checked = self.other_supported + self.other_contradicted
        return 100.0 * self.other_supported / checked if checked else None

    def to_doc(self) -> dict:
        return {
            "goal": {"supported": self.goal_supported,
                     "contradicted": self.goal_contradicted,
                     "accuracy": self.goal_accuracy},
            "other": {"supported": self.other_supported,
                      "contradicted": self.other_contradicted,
                      "accuracy": self.other_accuracy},
            "unverifiable": self.unverifiable,
        }


def _is_goal_related(claim: Claim) -> bool:
    return claim.kind is ClaimKind.SCORELINE or (
        claim.kind is ClaimKind.ORDINAL_EVENT_COUNT and claim.event_kind == "goal"
    )


def summarize_verdicts(verdicts: Iterable[Verdict]) -> VerdictSummary:
    goal_s = goal_c = other_s = other_c = unverifiable = 0
    for verdict in verdicts:
        if verdict.status is VerdictStatus.UNVERIFIABLE:
            unverifiable += 1
        elif _is_goal_related(verdict.claim):
            if verdict.status is VerdictStatus.SUPPORTED:
                goal_s += 1
            else:
                goal_c += 1
        else:
            if verdict.status is VerdictStatus.SUPPORTED:
                other_s += 1
            else:
                other_c += 1
    return VerdictSummary(goal_supported=goal_s, goal_contradicted=goal_c,
                          other_supported=other_s, other_contradicted=other_c,
                          unverifiable=unverifiable)
