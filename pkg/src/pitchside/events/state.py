"""State transitions: folding match events into GameState snapshots.

``apply_event`` implements the update calculus: a goal by side X
increments X's score, an own goal by X increments the opposing score
(applied symmetrically to both sides), substitutions swap lineup
membership, goal/card events extend the key-event timeline, and
commentary rotates through a bounded history window.
"""

from __future__ import annotations

from dataclasses import replace

from ..clock import Clock
from ..errors import ActorNotInLineup, ClockRegression, SubstitutionViolation
from .types import (
    CARD_KINDS,
    EventKind,
    GameState,
    KEY_EVENT_KINDS,
    MatchEvent,
    MatchLog,
    SCORING_KINDS,
    Side,
    credited_side,
)


def _require_in_lineup(state: GameState, event: MatchEvent, player, role: str) -> None:
    if player is not None and player not in state.lineup(event.team):
        raise ActorNotInLineup(
            f"{role} {player.name!r} not in active {event.team.value} lineup "
            f"at {event.clock}"
        )


def apply_event(state: GameState, event: MatchEvent) -> GameState:
    """Return the state after ``event``; the input state is untouched."""
    if event.clock < state.clock:
        raise ClockRegression(
            f"event at {event.clock} precedes state clock {state.clock}"
        )

    changes: dict = {"clock": event.clock}

    if event.kind is EventKind.SUBSTITUTION:
        lineup = state.lineup(event.team)
        if event.player_out not in lineup:
            raise SubstitutionViolation(
                f"outgoing player {event.player_out.name!r} is not active"
            )
        if event.player_in in lineup:
            raise SubstitutionViolation(
                f"incoming player {event.player_in.name!r} is already active"
            )
        remaining = tuple(p for p in lineup if p != event.player_out)
        if any(p.number == event.player_in.number for p in remaining):
            raise SubstitutionViolation(
                f"incoming number {event.player_in.number} already worn"
            )
        new_lineup = remaining + (event.player_in,)
        key = "lineup_home" if event.team is Side.HOME else "lineup_away"
        changes[key] = new_lineup
    else:
        _require_in_lineup(state, event, event.actor, "actor")
        _require_in_lineup(state, event, event.assist, "assist")

    if event.kind in SCORING_KINDS:
        scored_for = credited_side(event.kind, event.team)
        if scored_for is Side.HOME:
            changes["score_home"] = state.score_home + 1
        else:
            changes["score_away"] = state.score_away + 1

    if event.kind in KEY_EVENT_KINDS:
        changes["key_events"] = state.key_events + (event,)

    if event.kind is EventKind.COMMENTARY:
        window = state.history_events + (event,)
        changes["history_events"] = window[-state.history_capacity:]

    return replace(state, **changes)


def replay(
    log: MatchLog,
    at: Clock,
    *,
    inclusive: bool = False,
    history_k: int = 1,
) -> GameState:
    """Fold the log's events into the state as of ``at``.

    By default only events strictly before ``at`` are applied, so goals
    scored exactly at ``at`` are not yet visible; pass ``inclusive=True``
    to include them.  Deterministic: identical inputs yield identical
    states.  Errors from ``apply_event`` are re-raised with the offending
    event index attached.
    """
    state = log.initial_state(history_k=history_k)
    for index, event in enumerate(log.events):
        past = event.clock <= at if inclusive else event.clock < at
        if not past:
            break
        try:
            state = apply_event(state, event)
        except Exception as exc:
            exc.event_index = index
            raise
    return replace(state, clock=at)
