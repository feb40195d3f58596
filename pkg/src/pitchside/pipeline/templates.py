"""Versioned prompt templates and their rendering.

Templates live as text assets next to this module with a frozen
placeholder vocabulary.  Rendering substitutes ``{Name}`` tokens from
the vocabulary only, so literal braces (JSON examples in instructions)
pass through untouched.  A vocabulary placeholder without a supplied
value is an error, never silently left in place.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from ..errors import UnresolvedPlaceholder

PLACEHOLDER_VOCABULARY = frozenset({
    "Commentary", "Label", "Team_h", "Color_h", "Team_a", "Color_a",
    "W_top5", "Lineup_h", "Lineup_a", "HistoryTimeline", "Scene",
    "Team_g", "Options", "League", "Season", "Date", "GameTime",
    "ExternalKnowledge", "InternalKnowledge", "Question",
    "Transcription", "Teams",
})

TEMPLATE_NAMES = (
    "team_query",
    "player_query",
    "player_query_given_team",
    "question_generation",
    "refinement",
    "nl_to_dsl",
    "view_classification",
    "jersey_recognition",
    "knowledge_extraction",
)

_PLACEHOLDER_RE = re.compile(r"\{([A-Za-z_][A-Za-z0-9_]*)\}")


@lru_cache(maxsize=None)
def load_template(name: str) -> str:
    if name not in TEMPLATE_NAMES:
        raise UnresolvedPlaceholder(f"unknown template {name!r}")
    return (
        resources.files(__package__)
        .joinpath("templates", f"{name}.txt")
        .read_text(encoding="utf-8")
    )


def render(template: str, values: dict[str, str]) -> str:
    """Substitute vocabulary placeholders; byte-deterministic."""

    def substitute(match: re.Match) -> str:
        name = match.group(1)
        if name not in PLACEHOLDER_VOCABULARY:
            return match.group(0)
        if name not in values:
            raise UnresolvedPlaceholder(f"no value supplied for placeholder {{{name}}}")
        return values[name]

    return _PLACEHOLDER_RE.sub(substitute, template)


def render_template(name: str, values: dict[str, str]) -> str:
    return render(load_template(name), values)
