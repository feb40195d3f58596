"""Goal-timeline reconciliation against a secondary source.

Match logs scraped from one site occasionally omit goal events.  Given
a goal timeline fetched from a second source for the same fixture, the
merge inserts the missing goals without removing or mutating anything
already present.  Two goals are considered the same when they credit
the same side and their clocks agree within a configurable window
(±60 s by default; cross-site timestamps drift by under a minute).
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from ..clock import Clock
from ..errors import FixtureMismatch
from .types import EventKind, MatchEvent, MatchLog, PlayerRef, SCORING_KINDS, Side, credited_side

DEFAULT_WINDOW_S = 60


@dataclass(frozen=True, slots=True)
class SecondaryGoal:
    """One goal from the secondary timeline; ``team`` is the credited side."""

    clock: Clock
    team: Side
    actor: PlayerRef


@dataclass(frozen=True, slots=True)
class GoalTimeline:
    home: str
    away: str
    kickoff: datetime
    goals: tuple[SecondaryGoal, ...]


@dataclass(frozen=True, slots=True)
class ReconcileReport:
    added: int
    matched: int
    insertion_positions: tuple[int, ...]  # indices into the merged event list


def reconcile_goal_timelines(
    primary: MatchLog,
    secondary: GoalTimeline,
    window_s: int = DEFAULT_WINDOW_S,
) -> tuple[MatchLog, ReconcileReport]:
    """Insert secondary goals missing from the primary log, in clock order."""
    same_fixture = (
        primary.meta.home.team_name.casefold() == secondary.home.casefold()
        and primary.meta.away.team_name.casefold() == secondary.away.casefold()
        and primary.meta.kickoff == secondary.kickoff
    )
    if not same_fixture:
        raise FixtureMismatch(
            f"secondary timeline {secondary.home} vs {secondary.away} @ "
            f"{secondary.kickoff.isoformat()} does not match the primary log"
        )

    primary_goals = [
        (i, e) for i, e in enumerate(primary.events) if e.kind in SCORING_KINDS
    ]
    taken: set[int] = set()
    missing: list[SecondaryGoal] = []
    for goal in secondary.goals:
        best: int | None = None
        best_delta = window_s + 1
        for i, event in primary_goals:
            if i in taken:
                continue
            if credited_side(event.kind, event.team) is not goal.team:
                continue
            delta = abs(event.clock.absolute_s - goal.clock.absolute_s)
            if delta <= window_s and delta < best_delta:
                best, best_delta = i, delta
        if best is None:
            missing.append(goal)
        else:
            taken.add(best)

    merged = list(primary.events)
    positions: list[int] = []
    for goal in sorted(missing, key=lambda g: g.clock):
        event = MatchEvent(clock=goal.clock, kind=EventKind.GOAL, team=goal.team, actor=goal.actor)
        index = 0
        while index < len(merged) and merged[index].clock <= event.clock:
            index += 1
        merged.insert(index, event)
        positions.append(index)

    merged_log = MatchLog(
        meta=primary.meta,
        lineup_home=primary.lineup_home,
        lineup_away=primary.lineup_away,
        coach_home=primary.coach_home,
        coach_away=primary.coach_away,
        events=tuple(merged),
    )
    report = ReconcileReport(
        added=len(missing),
        matched=len(taken),
        insertion_positions=tuple(positions),
    )
    return merged_log, report
