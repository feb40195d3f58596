"""Shared builders for tests: deterministic fixtures and randomized logs/stores."""

from __future__ import annotations

import random
from datetime import datetime, timedelta

from pitchside.clock import Clock
from pitchside.events import (
    EventKind,
    MatchEvent,
    MatchLog,
    MatchMeta,
    PlayerRef,
    Position,
    Side,
    TeamSide,
)
from pitchside.statbase import MatchRow, PlayerRow, StatEventRow, StatStore

LINEUP_POSITIONS = (
    [Position.GOALKEEPER]
    + [Position.DEFENDER] * 4
    + [Position.MIDFIELDER] * 4
    + [Position.FORWARD] * 2
)

COMMENTARY_BODIES = [
    "[PLAYER] scores a goal for [TEAM].",
    "[PLAYER] passes to [PLAYER] on the wing.",
    "[COACH] reacts angrily on the touchline.",
    "[REFEREE] warns [PLAYER] after a late tackle.",
    "[PLAYER] wins a corner for [TEAM].",
    "[TEAM] keep possession patiently.",
    "[PLAYER] fires just wide of the post.",
]

MINOR_KINDS = (
    EventKind.CORNER,
    EventKind.FOUL,
    EventKind.FREE_KICK,
    EventKind.PENALTY_AWARDED,
    EventKind.OFFSIDE,
)

GOAL_CHOICES = (
    EventKind.GOAL,
    EventKind.GOAL,
    EventKind.PENALTY_GOAL,
    EventKind.HEADER_GOAL,
)


def make_lineup(prefix: str) -> tuple[PlayerRef, ...]:
    return tuple(
        PlayerRef(f"{prefix} Player {i + 1}", i + 1, LINEUP_POSITIONS[i])
        for i in range(11)
    )


def make_meta(
    home: str = "Riverton FC",
    away: str = "Harborview United",
    kickoff: datetime | None = None,
) -> MatchMeta:
    return MatchMeta(
        home=TeamSide(Side.HOME, home, "red"),
        away=TeamSide(Side.AWAY, away, "blue"),
        league="Coastal League",
        season="2016-2017",
        kickoff=kickoff or datetime(2016, 11, 22, 19, 45),
    )


def clock_from_abs(abs_s: int) -> Clock:
    if abs_s < 3600:
        return Clock(1, abs_s)
    return Clock(2, min(abs_s - 3600, 3600))


def random_match_log(
    rng: random.Random,
    n_events: int = 30,
    home: str = "Riverton FC",
    away: str = "Harborview United",
) -> MatchLog:
    """A valid random log: substitutions stay legal, actors stay active."""
    lineup_home = make_lineup("Home")
    lineup_away = make_lineup("Away")
    active = {Side.HOME: list(lineup_home), Side.AWAY: list(lineup_away)}
    bench = {
        side: [
            PlayerRef(f"{side.value.title()} Sub {i + 1}", 12 + i,
                      rng.choice(LINEUP_POSITIONS))
            for i in range(5)
        ]
        for side in (Side.HOME, Side.AWAY)
    }

    events: list[MatchEvent] = []
    abs_s = 0
    for _ in range(n_events):
        abs_s += rng.randint(0, 220)
        if abs_s > 7200:
            break
        clock = clock_from_abs(abs_s)
        side = rng.choice((Side.HOME, Side.AWAY))
        roll = rng.random()
        if roll < 0.18:
            kind = rng.choice(GOAL_CHOICES)
            actor = rng.choice(active[side])
            assist = None
            if rng.random() < 0.5:
                others = [p for p in active[side] if p != actor]
                assist = rng.choice(others)
            events.append(MatchEvent(clock=clock, kind=kind, team=side,
                                     actor=actor, assist=assist))
        elif roll < 0.24:
            actor = rng.choice(active[side])
            events.append(MatchEvent(clock=clock, kind=EventKind.OWN_GOAL,
                                     team=side, actor=actor))
        elif roll < 0.38:
            kind = EventKind.YELLOW_CARD if rng.random() < 0.8 else EventKind.RED_CARD
            events.append(MatchEvent(clock=clock, kind=kind, team=side,
                                     actor=rng.choice(active[side])))
        elif roll < 0.48 and bench[side]:
            player_out = rng.choice(active[side])
            player_in = bench[side].pop()
            active[side] = [p for p in active[side] if p != player_out] + [player_in]
            events.append(MatchEvent(clock=clock, kind=EventKind.SUBSTITUTION,
                                     team=side, player_in=player_in,
                                     player_out=player_out))
        elif roll < 0.70:
            kind = rng.choice(MINOR_KINDS)
            actor = rng.choice(active[side]) if rng.random() < 0.7 else None
            events.append(MatchEvent(clock=clock, kind=kind, team=side, actor=actor))
        else:
            events.append(MatchEvent(clock=clock, kind=EventKind.COMMENTARY,
                                     team=side,
                                     detail=rng.choice(COMMENTARY_BODIES)))

    return MatchLog(
        meta=make_meta(home=home, away=away),
        lineup_home=lineup_home,
        lineup_away=lineup_away,
        coach_home="Home Coach",
        coach_away="Away Coach",
        events=tuple(events),
    )


STORE_TEAMS = ["Riverton FC", "Harborview United", "Eastgate Rovers", "Milltown City"]
STORE_PLAYERS = ["Alex Mercer", "Jonas Kvist", "Pavel Horak", "Sam Whitlow"]
STORE_SEASONS = ["2015-2016", "2016-2017"]
STORE_LEAGUES = ["Coastal League", "Continental Cup"]
STORE_KINDS = ["goal", "assist", "yellow_card", "red_card", "foul", "corner",
               "penalty_awarded", "free_kick"]
STORE_METHODS = ["", "penalty", "header", "own_goal"]


def random_store(
    rng: random.Random,
    n_matches: int = 5,
    events_per_match: int = 6,
    base: datetime | None = None,
) -> StatStore:
    """A small consistent store with varied teams, seasons, and kinds."""
    base = base or datetime(2015, 8, 1, 15, 0)
    matches = []
    events = []
    for i in range(n_matches):
        home, away = rng.sample(STORE_TEAMS, 2)
        kickoff = base + timedelta(days=rng.randint(0, 700),
                                   hours=rng.randint(0, 23))
        match_id = f"m{i:03d}"
        matches.append(MatchRow(
            match_id=match_id, home=home, away=away,
            league=rng.choice(STORE_LEAGUES), season=rng.choice(STORE_SEASONS),
            kickoff=kickoff, score_home=rng.randint(0, 4),
            score_away=rng.randint(0, 4)))
        for _ in range(rng.randint(0, events_per_match)):
            kind = rng.choice(STORE_KINDS)
            method = rng.choice(STORE_METHODS) if kind == "goal" else ""
            events.append(StatEventRow(
                match_id=match_id,
                clock=Clock(rng.choice((1, 2)), rng.randint(0, 3600)),
                kind=kind, team=rng.choice((home, away)),
                player=rng.choice(STORE_PLAYERS + [""]),
                method=method))
    players = tuple(
        PlayerRow(name=name, nationality="Utopia", height_cm=170 + i,
                  birthdate=datetime(1990, 1, 1 + i).date())
        for i, name in enumerate(STORE_PLAYERS)
    )
    return StatStore(matches=tuple(matches), stat_events=tuple(events),
                     players=players)
