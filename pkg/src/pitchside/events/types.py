"""Domain types for the event-sourced match-state machine.

A match log is the replayable source of truth: metadata, starting
lineups, and an ordered stream of typed events.  All types are frozen
values; state evolution happens by folding events into new GameState
snapshots (see :mod:`pitchside.events.state`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

from ..clock import Clock
from ..errors import SchemaError

LINEUP_SIZE = 11


class Position(str, Enum):
    GOALKEEPER = "goalkeeper"
    DEFENDER = "defender"
    MIDFIELDER = "midfielder"
    FORWARD = "forward"


class Side(str, Enum):
    HOME = "home"
    AWAY = "away"

    @property
    def opponent(self) -> "Side":
        return Side.AWAY if self is Side.HOME else Side.HOME


class EventKind(str, Enum):
    GOAL = "goal"
    OWN_GOAL = "own_goal"
    PENALTY_GOAL = "penalty_goal"
    HEADER_GOAL = "header_goal"
    YELLOW_CARD = "yellow_card"
    RED_CARD = "red_card"
    SUBSTITUTION = "substitution"
    CORNER = "corner"
    FOUL = "foul"
    FREE_KICK = "free_kick"
    PENALTY_AWARDED = "penalty_awarded"
    OFFSIDE = "offside"
    COMMENTARY = "commentary"


# goal subkinds credit the actor's own side; an own goal credits the opponent
OWN_SIDE_GOAL_KINDS = frozenset({EventKind.GOAL, EventKind.PENALTY_GOAL, EventKind.HEADER_GOAL})
SCORING_KINDS = OWN_SIDE_GOAL_KINDS | {EventKind.OWN_GOAL}
CARD_KINDS = frozenset({EventKind.YELLOW_CARD, EventKind.RED_CARD})
KEY_EVENT_KINDS = SCORING_KINDS | CARD_KINDS


def credited_side(kind: EventKind, team: Side) -> Side:
    """Side whose score a scoring event increments."""
    if kind not in SCORING_KINDS:
        raise ValueError(f"{kind.value} is not a scoring kind")
    return team.opponent if kind is EventKind.OWN_GOAL else team


@dataclass(frozen=True, slots=True)
class PlayerRef:
    name: str
    number: int
    position: Position

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("player name must be non-empty")
        if not 1 <= self.number <= 99:
            raise SchemaError(f"jersey number must be in [1, 99], got {self.number}")


@dataclass(frozen=True, slots=True)
class TeamSide:
    side: Side
    team_name: str
    jersey_color: str


@dataclass(frozen=True, slots=True)
class MatchEvent:
    clock: Clock
    kind: EventKind
    team: Side
    actor: PlayerRef | None = None
    assist: PlayerRef | None = None
    player_in: PlayerRef | None = None
    player_out: PlayerRef | None = None
    detail: str | None = None

    def __post_init__(self) -> None:
        if self.kind in SCORING_KINDS and self.actor is None:
            raise SchemaError(f"{self.kind.value} event requires an actor")
        if self.kind is EventKind.SUBSTITUTION and (
            self.player_in is None or self.player_out is None
        ):
            raise SchemaError("substitution requires both incoming and outgoing players")
        if self.kind is EventKind.COMMENTARY and self.detail is None:
            raise SchemaError("commentary event requires a detail body")

    @property
    def half(self) -> int:
        return self.clock.half

    @property
    def offset_s(self) -> int:
        return self.clock.offset_s


@dataclass(frozen=True, slots=True)
class MatchMeta:
    home: TeamSide
    away: TeamSide
    league: str
    season: str
    kickoff: datetime

    def __post_init__(self) -> None:
        if self.home.team_name == self.away.team_name:
            raise SchemaError("home and away team names must differ")
        if self.home.side is not Side.HOME or self.away.side is not Side.AWAY:
            raise SchemaError("meta sides must be (home, away)")

    def team(self, side: Side) -> TeamSide:
        return self.home if side is Side.HOME else self.away


@dataclass(frozen=True, slots=True)
class GameState:
    """Snapshot of the game at ``clock``: score, active lineups, timelines.

    ``key_events`` holds goal and card events seen so far;
    ``history_events`` holds the latest ``history_capacity`` commentary
    events.  Snapshots are immutable and safe to share between tasks.
    """

    score_home: int
    score_away: int
    lineup_home: tuple[PlayerRef, ...]
    lineup_away: tuple[PlayerRef, ...]
    coach_home: str
    coach_away: str
    clock: Clock
    key_events: tuple[MatchEvent, ...] = ()
    history_events: tuple[MatchEvent, ...] = ()
    history_capacity: int = 1

    def lineup(self, side: Side) -> tuple[PlayerRef, ...]:
        return self.lineup_home if side is Side.HOME else self.lineup_away

    def score(self, side: Side) -> int:
        return self.score_home if side is Side.HOME else self.score_away


@dataclass(frozen=True, slots=True)
class MatchLog:
    meta: MatchMeta
    lineup_home: tuple[PlayerRef, ...]
    lineup_away: tuple[PlayerRef, ...]
    coach_home: str
    coach_away: str
    events: tuple[MatchEvent, ...] = field(default=())

    def __post_init__(self) -> None:
        for side, lineup in (("home", self.lineup_home), ("away", self.lineup_away)):
            if len(lineup) != LINEUP_SIZE:
                raise SchemaError(
                    f"{side} starting lineup must have {LINEUP_SIZE} players, got {len(lineup)}"
                )
            numbers = [p.number for p in lineup]
            if len(set(numbers)) != len(numbers):
                raise SchemaError(f"duplicate jersey numbers in {side} lineup")
        clocks = [e.clock for e in self.events]
        if clocks != sorted(clocks):
            raise SchemaError("events must be sorted by (half, offset_s)")

    def initial_state(self, history_k: int = 1) -> GameState:
        return GameState(
            score_home=0,
            score_away=0,
            lineup_home=self.lineup_home,
            lineup_away=self.lineup_away,
            coach_home=self.coach_home,
            coach_away=self.coach_away,
            clock=Clock(1, 0),
            history_capacity=history_k,
        )
