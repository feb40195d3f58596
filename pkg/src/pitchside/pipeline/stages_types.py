"""Commentary value type shared across pipeline stages."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..clock import Clock
from ..errors import SchemaError

_PLACEHOLDERS = ("[PLAYER]", "[TEAM]", "[COACH]", "[REFEREE]")


class CommentaryStage(str, Enum):
    ANONYMIZED = "anonymized"
    ENTITY_ALIGNED = "entity_aligned"
    KNOWLEDGE_ENHANCED = "knowledge_enhanced"


@dataclass(frozen=True, slots=True)
class Commentary:
    """A commentary body at one of the three pipeline stages.

    Anonymized bodies must still carry placeholders; entity-aligned
    bodies must carry none.
    """

    stage: CommentaryStage
    body: str
    clock: Clock
    event_label: str

    def __post_init__(self) -> None:
        has_placeholder = any(tag in self.body for tag in _PLACEHOLDERS)
        if self.stage is CommentaryStage.ANONYMIZED and not has_placeholder:
            raise SchemaError("anonymized commentary must contain placeholders")
        if self.stage is CommentaryStage.ENTITY_ALIGNED and has_placeholder:
            raise SchemaError("entity-aligned commentary must not contain placeholders")
