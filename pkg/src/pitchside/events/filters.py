"""Selection of single-entity anonymized commentary.

Commentary bodies use [PLAYER]/[TEAM]/[COACH]/[REFEREE] placeholders.
Only pieces naming exactly one [PLAYER] and no [COACH]/[REFEREE] are
usable for entity alignment; everything else is dropped and counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .types import EventKind, MatchEvent, MatchLog

PLAYER_PLACEHOLDER = "[PLAYER]"
TEAM_PLACEHOLDER = "[TEAM]"
COACH_PLACEHOLDER = "[COACH]"
REFEREE_PLACEHOLDER = "[REFEREE]"


@dataclass(frozen=True, slots=True)
class FilterResult:
    kept: tuple[MatchEvent, ...]
    dropped: int


def is_single_entity(body: str) -> bool:
    return (
        body.count(PLAYER_PLACEHOLDER) == 1
        and COACH_PLACEHOLDER not in body
        and REFEREE_PLACEHOLDER not in body
    )


def filter_single_entity(log: MatchLog) -> FilterResult:
    """Keep commentary events usable for single-player alignment."""
    kept: list[MatchEvent] = []
    dropped = 0
    for event in log.events:
        if event.kind is not EventKind.COMMENTARY:
            continue
        if is_single_entity(event.detail or ""):
            kept.append(event)
        else:
            dropped += 1
    return FilterResult(kept=tuple(kept), dropped=dropped)
