"""Keyframe face matching against the active lineups.

A player counts as recognized in a shot when the best similarity over
that shot's keyframe slots is strictly above the threshold (0.6 by
default).  Some face tools report distances instead of similarities;
``convention="distance"`` flips the comparison to strictly below.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from ..errors import CandidateNotInLineup, SchemaError
from ..events.types import PlayerRef
from .types import FaceObservation

DEFAULT_FACE_TAU = 0.6


def match_faces(
    observations: Iterable[FaceObservation],
    lineup: Iterable[PlayerRef],
    tau: float = DEFAULT_FACE_TAU,
    convention: str = "similarity",
) -> dict[int, frozenset[PlayerRef]]:
    """Per-shot sets of recognized players, always subsets of the lineup."""
    if not 0.0 < tau < 1.0:
        raise SchemaError(f"tau must be inside (0, 1), got {tau}")
    if convention not in ("similarity", "distance"):
        raise SchemaError(f"unknown convention {convention!r}")
    roster = set(lineup)

    best: dict[tuple[int, PlayerRef], float] = {}
    for obs in observations:
        if obs.candidate not in roster:
            raise CandidateNotInLineup(
                f"candidate {obs.candidate.name!r} is not in the active lineup"
            )
        key = (obs.shot_index, obs.candidate)
        if convention == "similarity":
            best[key] = max(best.get(key, 0.0), obs.similarity)
        else:
            best[key] = min(best.get(key, 1.0), obs.similarity)

    recognized: dict[int, set[PlayerRef]] = defaultdict(set)
    for (shot_index, player), score in best.items():
        matched = score > tau if convention == "similarity" else score < tau
        if matched:
            recognized[shot_index].add(player)
    return {shot: frozenset(players) for shot, players in recognized.items()}
