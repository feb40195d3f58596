"""Types for fine-grained shot analysis of a broadcast segment."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import InvalidJerseyRecord, SchemaError
from ..events.types import PlayerRef


class ViewLabel(str, Enum):
    LONG = "long"
    MEDIUM = "medium"
    CLOSE_UP = "close_up"
    OUT_OF_FIELD = "out_of_field"


# medium and close-up views are the only shots mined for faces and jerseys
CLOSE_VIEWS = frozenset({ViewLabel.MEDIUM, ViewLabel.CLOSE_UP})


@dataclass(frozen=True, slots=True)
class Shot:
    """Half-open frame interval [start_frame, end_frame) with a view class."""

    start_frame: int
    end_frame: int
    view: ViewLabel

    def __post_init__(self) -> None:
        if self.start_frame >= self.end_frame:
            raise SchemaError(
                f"shot start {self.start_frame} must precede end {self.end_frame}"
            )


@dataclass(frozen=True, slots=True)
class FaceObservation:
    """One face-similarity score for a candidate in one keyframe of a shot.

    Each shot contributes up to three keyframes; a candidate is matched
    on the max similarity across its slots.
    """

    shot_index: int
    keyframe_slot: int
    candidate: PlayerRef
    similarity: float

    def __post_init__(self) -> None:
        if self.keyframe_slot not in (1, 2, 3):
            raise SchemaError(f"keyframe_slot must be 1..3, got {self.keyframe_slot}")
        if not 0.0 <= self.similarity <= 1.0:
            raise SchemaError(f"similarity must be in [0, 1], got {self.similarity}")


@dataclass(frozen=True, slots=True)
class JerseyRecord:
    """OCR/captioning output restricted to (name, number, color): action."""

    color: str
    action: str
    name: str | None = None
    number: int | None = None

    def __post_init__(self) -> None:
        if self.name is None and self.number is None:
            raise InvalidJerseyRecord("jersey record needs a name or a number")


@dataclass(frozen=True, slots=True)
class SceneReport:
    """Per-shot visual details of a segment, face/jersey data gated to close views."""

    shots: tuple[Shot, ...]
    recognized: tuple[frozenset[PlayerRef], ...]
    jerseys: tuple[tuple[JerseyRecord, ...], ...]
    resolved_colors: tuple[str, str] | None = None  # (home, away)

    def __post_init__(self) -> None:
        if not (len(self.shots) == len(self.recognized) == len(self.jerseys)):
            raise SchemaError("per-shot sequences must have equal length")
