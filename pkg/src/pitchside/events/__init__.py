"""Event-sourced match-state machine: types, replay, ingestion, reconciliation."""

from .filters import FilterResult, filter_single_entity, is_single_entity
from .logio import (
    dump_match_log,
    event_from_doc,
    event_to_doc,
    load_match_log,
    match_log_from_doc,
    match_log_to_doc,
    parse_kickoff,
    player_from_doc,
    player_to_doc,
)
from .reconcile import (
    DEFAULT_WINDOW_S,
    GoalTimeline,
    ReconcileReport,
    SecondaryGoal,
    reconcile_goal_timelines,
)
from .state import apply_event, replay
from .types import (
    CARD_KINDS,
    EventKind,
    GameState,
    KEY_EVENT_KINDS,
    LINEUP_SIZE,
    MatchEvent,
    MatchLog,
    MatchMeta,
    OWN_SIDE_GOAL_KINDS,
    PlayerRef,
    Position,
    SCORING_KINDS,
    Side,
    TeamSide,
    credited_side,
)

__all__ = [
    "CARD_KINDS",
    "DEFAULT_WINDOW_S",
    "EventKind",
    "FilterResult",
    "GameState",
    "GoalTimeline",
    "KEY_EVENT_KINDS",
    "LINEUP_SIZE",
    "MatchEvent",
    "MatchLog",
    "MatchMeta",
    "OWN_SIDE_GOAL_KINDS",
    "PlayerRef",
    "Position",
    "ReconcileReport",
    "SCORING_KINDS",
    "SecondaryGoal",
    "Side",
    "TeamSide",
    "apply_event",
    "credited_side",
    "dump_match_log",
    "event_from_doc",
    "event_to_doc",
    "filter_single_entity",
    "is_single_entity",
    "load_match_log",
    "match_log_from_doc",
    "match_log_to_doc",
    "parse_kickoff",
    "player_from_doc",
    "player_to_doc",
    "reconcile_goal_timelines",
    "replay",
]
