"""Match log documents: one JSON document per match.

Schema::

    {"meta": {"home", "away", "league", "season", "kickoff",
              "home_color", "away_color"},
     "lineups": {"home": [{"name", "number", "position"} x11],
                 "away": [...], "home_coach", "away_coach"},
     "events": [{"half", "offset_s", "kind", "team",
                 "actor"?, "in"?, "out"?, "assist"?, "detail"?}]}

UTF-8 text; in strict mode unknown fields are rejected, in lenient
mode they are ignored.
"""

from __future__ import annotations

import json
from datetime import datetime
from pathlib import Path

from ..clock import Clock
from ..errors import SchemaError
from .types import (
    EventKind,
    MatchEvent,
    MatchLog,
    MatchMeta,
    PlayerRef,
    Position,
    Side,
    TeamSide,
)

_META_FIELDS = {"home", "away", "league", "season", "kickoff", "home_color", "away_color"}
_LINEUPS_FIELDS = {"home", "away", "home_coach", "away_coach"}
_PLAYER_FIELDS = {"name", "number", "position"}
_EVENT_FIELDS = {"half", "offset_s", "kind", "team", "actor", "in", "out", "assist", "detail"}


def parse_kickoff(text: str) -> datetime:
    try:
        return datetime.fromisoformat(text.replace("Z", "+00:00"))
    except ValueError as exc:
        raise SchemaError(f"kickoff {text!r} is not ISO-8601") from exc


def _check_fields(doc: dict, allowed: set, where: str, strict: bool) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{where} must be an object")
    if strict:
        unknown = set(doc) - allowed
        if unknown:
            raise SchemaError(f"unknown fields in {where}: {sorted(unknown)}")


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise SchemaError(f"missing field {key!r} in {where}")
    return doc[key]


def player_from_doc(doc: dict, where: str = "player", strict: bool = True) -> PlayerRef:
    _check_fields(doc, _PLAYER_FIELDS, where, strict)
    try:
        position = Position(_require(doc, "position", where))
    except ValueError as exc:
        raise SchemaError(f"bad position in {where}: {doc.get('position')!r}") from exc
    return PlayerRef(
        name=str(_require(doc, "name", where)),
        number=int(_require(doc, "number", where)),
        position=position,
    )


def player_to_doc(player: PlayerRef) -> dict:
    return {"name": player.name, "number": player.number, "position": player.position.value}


def event_from_doc(doc: dict, index: int, strict: bool = True) -> MatchEvent:
    where = f"events[{index}]"
    _check_fields(doc, _EVENT_FIELDS, where, strict)
    try:
        kind = EventKind(_require(doc, "kind", where))
        team = Side(_require(doc, "team", where))
    except ValueError as exc:
        raise SchemaError(f"bad kind/team in {where}") from exc

    def opt_player(key: str) -> PlayerRef | None:
        raw = doc.get(key)
        return None if raw is None else player_from_doc(raw, f"{where}.{key}", strict)

    return MatchEvent(
        clock=Clock(int(_require(doc, "half", where)), int(_require(doc, "offset_s", where))),
        kind=kind,
        team=team,
        actor=opt_player("actor"),
        assist=opt_player("assist"),
        player_in=opt_player("in"),
        player_out=opt_player("out"),
        detail=doc.get("detail"),
    )


def event_to_doc(event: MatchEvent) -> dict:
    doc: dict = {
        "half": event.clock.half,
        "offset_s": event.clock.offset_s,
        "kind": event.kind.value,
        "team": event.team.value,
    }
    if event.actor is not None:
        doc["actor"] = player_to_doc(event.actor)
    if event.assist is not None:
        doc["assist"] = player_to_doc(event.assist)
    if event.player_in is not None:
        doc["in"] = player_to_doc(event.player_in)
    if event.player_out is not None:
        doc["out"] = player_to_doc(event.player_out)
    if event.detail is not None:
        doc["detail"] = event.detail
    return doc


def match_log_from_doc(doc: dict, strict: bool = True) -> MatchLog:
    _check_fields(doc, {"meta", "lineups", "events"}, "match log", strict)
    meta_doc = _require(doc, "meta", "match log")
    _check_fields(meta_doc, _META_FIELDS, "meta", strict)
    meta = MatchMeta(
        home=TeamSide(Side.HOME, str(_require(meta_doc, "home", "meta")),
                      str(_require(meta_doc, "home_color", "meta"))),
        away=TeamSide(Side.AWAY, str(_require(meta_doc, "away", "meta")),
                      str(_require(meta_doc, "away_color", "meta"))),
        league=str(_require(meta_doc, "league", "meta")),
        season=str(_require(meta_doc, "season", "meta")),
        kickoff=parse_kickoff(str(_require(meta_doc, "kickoff", "meta"))),
    )
    lineups = _require(doc, "lineups", "match log")
    _check_fields(lineups, _LINEUPS_FIELDS, "lineups", strict)
    home = tuple(
        player_from_doc(p, f"lineups.home[{i}]", strict)
        for i, p in enumerate(_require(lineups, "home", "lineups"))
    )
    away = tuple(
        player_from_doc(p, f"lineups.away[{i}]", strict)
        for i, p in enumerate(_require(lineups, "away", "lineups"))
    )
    events = tuple(
        event_from_doc(e, i, strict) for i, e in enumerate(doc.get("events", []))
    )
    return MatchLog(
        meta=meta,
        lineup_home=home,
        lineup_away=away,
        coach_home=str(_require(lineups, "home_coach", "lineups")),
        coach_away=str(_require(lineups, "away_coach", "lineups")),
        events=events,
    )


def match_log_to_doc(log: MatchLog) -> dict:
    return {
        "meta": {
            "home": log.meta.home.team_name,
            "away": log.meta.away.team_name,
            "league": log.meta.league,
            "season": log.meta.season,
            "kickoff": log.meta.kickoff.isoformat(),
            "home_color": log.meta.home.jersey_color,
            "away_color": log.meta.away.jersey_color,
        },
        "lineups": {
            "home": [player_to_doc(p) for p in log.lineup_home],
            "away": [player_to_doc(p) for p in log.lineup_away],
            "home_coach": log.coach_home,
            "away_coach": log.coach_away,
        },
        "events": [event_to_doc(e) for e in log.events],
    }


def load_match_log(path: str | Path, strict: bool = True) -> MatchLog:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return match_log_from_doc(doc, strict=strict)


def dump_match_log(log: MatchLog, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(match_log_to_doc(log), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
