"""Alignment accuracy: top-1/top-3 player accuracy and team accuracy.

Team accuracy derives from the predicted player's team, so on
well-formed records a correct player always implies a correct team and
team accuracy can never fall below player accuracy.  Records from the
given-team setting (the reasoner was told the correct team) populate a
separate split.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import EmptyInput, SchemaError


class RecordVariant(str, Enum):
    OPEN = "open"
    GIVEN_TEAM = "given_team"


@dataclass(frozen=True, slots=True)
class PredictionRecord:
    segment_id: str
    gold_player: str
    gold_team: str
    predicted_player: str
    predicted_team: str
    top3: tuple[str, ...] | None = None
    variant: RecordVariant = RecordVariant.OPEN

    def __post_init__(self) -> None:
        if self.top3 is not None:
            if not self.top3:
                raise SchemaError("top3, when present, must be non-empty")
            if self.top3[0] != self.predicted_player:
                raise SchemaError("top3 must start with the top-1 prediction")


@dataclass(frozen=True, slots=True)
class AccuracySplit:
    count: int
    player_at_1: float
    player_at_3: float
    team: float

    def to_doc(self) -> dict:
        return {"count": self.count, "player_at_1": self.player_at_1,
                "player_at_3": self.player_at_3, "team": self.team}


@dataclass(frozen=True, slots=True)
class AccuracyReport:
    overall: AccuracySplit
    open: AccuracySplit | None
    given_team: AccuracySplit | None

    def to_doc(self) -> dict:
        doc = {"overall": self.overall.to_doc()}
        if self.open is not None:
            doc["open"] = self.open.to_doc()
        if self.given_team is not None:
            doc["given_team"] = self.given_team.to_doc()
        return doc


def _split(records: Sequence[PredictionRecord]) -> AccuracySplit:
    total = len(records)
    at_1 = sum(1 for r in records if r.predicted_player == r.gold_player)
    at_3 = sum(
        1 for r in records
        if r.gold_player in (r.top3 if r.top3 is not None else (r.predicted_player,))
    )
    team = sum(1 for r in records if r.predicted_team == r.gold_team)
    return AccuracySplit(
        count=total,
        player_at_1=100.0 * at_1 / total,
        player_at_3=100.0 * at_3 / total,
        team=100.0 * team / total,
    )


def alignment_accuracy(records: Iterable[PredictionRecord]) -> AccuracyReport:
    records = list(records)
    if not records:
        raise EmptyInput("no prediction records")
    opens = [r for r in records if r.variant is RecordVariant.OPEN]
    given = [r for r in records if r.variant is RecordVariant.GIVEN_TEAM]
    return AccuracyReport(
        overall=_split(records),
        open=_split(opens) if opens else None,
        given_team=_split(given) if given else None,
    )


def load_prediction_records(path: str | Path) -> list[PredictionRecord]:
    """Read line-delimited JSON prediction records."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"{path}:{line_no}: invalid JSON") from exc
            try:
                records.append(PredictionRecord(
                    segment_id=str(doc["segment"]),
                    gold_player=doc["gold_player"],
                    gold_team=doc["gold_team"],
                    predicted_player=doc["predicted_player"],
                    predicted_team=doc["predicted_team"],
                    top3=tuple(doc["top3"]) if doc.get("top3") else None,
                    variant=RecordVariant(doc.get("variant", "open")),
                ))
            except KeyError as exc:
                raise SchemaError(f"{path}:{line_no}: missing field {exc}") from exc
    return records
