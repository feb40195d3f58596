"""Prompt context assembly for the entity-alignment stage.

Active players are presented as short deterministic hashes with their
jersey number and role, and the answer is requested as a letter choice
over those hashes (22 for player queries, 2 for team queries).  The
key-event timeline is deliberately left out of this stage's context;
only the bounded history timeline is included.
"""

from __future__ import annotations

import hashlib
import string
from dataclasses import dataclass
from enum import Enum

from ..events.types import GameState, PlayerRef, Side, TeamSide
from ..grounding import FrameRelevance, top_frames_to_seconds
from ..scene.report import render_scene
from ..scene.types import SceneReport
from .stages_types import Commentary
from .templates import render_template

TEAM_OPTIONS = ("hometeam", "awayteam")


class PromptVariant(str, Enum):
    TEAM_QUERY = "team_query"
    PLAYER_QUERY = "player_query"
    PLAYER_QUERY_GIVEN_TEAM = "player_query_given_team"


def player_hash(player: PlayerRef, side: Side) -> str:
    token = f"{side.value}:{player.name}:{player.number}"
    return hashlib.sha1(token.encode("utf-8")).hexdigest()[:8]


@dataclass(frozen=True)
class OptionSet:
    """Ordered option tokens plus the hash -> (player, side) mapping."""

    options: tuple[str, ...]
    players: dict[str, tuple[PlayerRef, Side]]


def player_options(state: GameState) -> OptionSet:
    """Home lineup then away lineup, each as an 8-hex hash."""
    options: list[str] = []
    mapping: dict[str, tuple[PlayerRef, Side]] = {}
    for side in (Side.HOME, Side.AWAY):
        for player in state.lineup(side):
            token = player_hash(player, side)
            options.append(token)
            mapping[token] = (player, side)
    return OptionSet(options=tuple(options), players=mapping)


def render_options(options: tuple[str, ...]) -> str:
    letters = string.ascii_uppercase
    return " ".join(f"{letters[i]}. {option}" for i, option in enumerate(options))


def render_lineup(lineup: tuple[PlayerRef, ...], side: Side) -> str:
    return "; ".join(
        f"{player_hash(p, side)} (#{p.number}, {p.position.value})" for p in lineup
    )


def render_history(state: GameState) -> str:
    if not state.history_events:
        return "None"
    return " | ".join(
        f"[{e.clock}] {e.detail}" for e in state.history_events
    )


def render_seconds(seconds: list[float]) -> str:
    parts = []
    for value in seconds:
        parts.append(str(int(value)) if value == int(value) else f"{value:g}")
    return ", ".join(parts) if parts else "unknown"


def assemble_context(
    state: GameState,
    scene: SceneReport,
    relevance: FrameRelevance,
    commentary: Commentary,
    variant: PromptVariant,
    home: TeamSide,
    away: TeamSide,
    *,
    given_team: str | None = None,
    relevance_fps: float = 1.0,
) -> str:
    """Render the stage-one prompt for a segment; identical inputs give
    identical bytes."""
    top_seconds = render_seconds(top_frames_to_seconds(relevance, fps=relevance_fps))
    values = {
        "Commentary": commentary.body,
        "Label": commentary.event_label,
        "Team_h": home.team_name,
        "Color_h": home.jersey_color,
        "Team_a": away.team_name,
        "Color_a": away.jersey_color,
        "W_top5": top_seconds,
    }
    if variant is PromptVariant.TEAM_QUERY:
        values["Options"] = render_options(TEAM_OPTIONS)
        return render_template(variant.value, values)
    values.update({
        "Lineup_h": render_lineup(state.lineup_home, Side.HOME),
        "Lineup_a": render_lineup(state.lineup_away, Side.AWAY),
        "HistoryTimeline": render_history(state),
        "Scene": render_scene(scene),
        "Options": render_options(player_options(state).options),
    })
    if variant is PromptVariant.PLAYER_QUERY_GIVEN_TEAM:
        if given_team is None:
            raise ValueError("given_team is required for the given-team variant")
        values["Team_g"] = given_team
    return render_template(variant.value, values)
