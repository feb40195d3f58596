"""The statistics store: matches, stat events, and player backgrounds.

Loaded from a directory of three UTF-8 CSV files (header row required)::

    matches.csv      match_id,home,away,league,season,kickoff,score_home,score_away
    stat_events.csv  match_id,clock,kind,team,player,method
    players.csv      name,nationality,height_cm,birthdate

``clock`` uses the ``"H - MM:SS"`` text form; ``player`` and ``method``
may be empty.  The store is immutable after load and safe for unlimited
concurrent readers.  Name matching is exact after Unicode NFC
normalization and case folding; fuzzy matching is out of scope.
"""

from __future__ import annotations

import csv
import unicodedata
from dataclasses import dataclass, field
from datetime import date, datetime
from pathlib import Path

from ..clock import Clock, parse_clock
from ..errors import DuplicateEntity, SchemaError, UnknownEntity
from .query import to_naive_utc

STAT_EVENT_KIND_VALUES = frozenset(
    {"goal", "assist", "yellow_card", "red_card", "foul", "corner",
     "penalty_awarded", "free_kick"}
)
GOAL_METHOD_VALUES = frozenset({"", "penalty", "header", "own_goal"})


def normalize_name(name: str) -> str:
    return unicodedata.normalize("NFC", name).casefold()


@dataclass(frozen=True, slots=True)
class MatchRow:
    match_id: str
    home: str
    away: str
    league: str
    season: str
    kickoff: datetime
    score_home: int
    score_away: int


@dataclass(frozen=True, slots=True)
class StatEventRow:
    match_id: str
    clock: Clock
    kind: str
    team: str
    player: str
    method: str


@dataclass(frozen=True, slots=True)
class PlayerRow:
    name: str
    nationality: str
    height_cm: int
    birthdate: date


@dataclass(frozen=True)
class StatStore:
    matches: tuple[MatchRow, ...]
    stat_events: tuple[StatEventRow, ...]
    players: tuple[PlayerRow, ...]
    match_index: dict[str, MatchRow] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        index: dict[str, MatchRow] = {}
        for row in self.matches:
            if row.match_id in index:
                raise SchemaError(f"duplicate match_id {row.match_id!r}")
            index[row.match_id] = row
        for event in self.stat_events:
            if event.match_id not in index:
                raise SchemaError(
                    f"stat event references unknown match_id {event.match_id!r}"
                )
            if event.kind not in STAT_EVENT_KIND_VALUES:
                raise SchemaError(f"unknown stat-event kind {event.kind!r}")
            if event.method not in GOAL_METHOD_VALUES:
                raise SchemaError(f"unknown goal method {event.method!r}")
        object.__setattr__(self, "match_index", index)


def player_background(store: StatStore, name: str) -> PlayerRow:
    """Exact background record for a player; duplicates need disambiguation."""
    wanted = normalize_name(name)
    found = [p for p in store.players if normalize_name(p.name) == wanted]
    if not found:
        raise UnknownEntity(f"player {name!r} is not in the store")
    if len(found) > 1:
        raise DuplicateEntity(f"{len(found)} players named {name!r}; disambiguation required")
    return found[0]


def _read_rows(path: Path, columns: list[str]) -> list[dict]:
    if not path.exists():
        raise SchemaError(f"missing store file {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != columns:
            raise SchemaError(f"{path}: header must be {','.join(columns)}")
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns):
                raise SchemaError(f"{path}:{line_no}: expected {len(columns)} fields")
            rows.append(dict(zip(columns, row)))
    return rows


def _parse_store_datetime(text: str, where: str) -> datetime:
    try:
        return to_naive_utc(datetime.fromisoformat(text.replace("Z", "+00:00")))
    except ValueError as exc:
        raise SchemaError(f"{where}: bad datetime {text!r}") from exc


def load_store(directory: str | Path) -> StatStore:
    directory = Path(directory)
    matches = tuple(
        MatchRow(
            match_id=r["match_id"],
            home=r["home"],
            away=r["away"],
            league=r["league"],
            season=r["season"],
            kickoff=_parse_store_datetime(r["kickoff"], "matches.csv"),
            score_home=int(r["score_home"]),
            score_away=int(r["score_away"]),
        )
        for r in _read_rows(
            directory / "matches.csv",
            ["match_id", "home", "away", "league", "season", "kickoff",
             "score_home", "score_away"],
        )
    )
    stat_events = tuple(
        StatEventRow(
            match_id=r["match_id"],
            clock=parse_clock(r["clock"]),
            kind=r["kind"],
            team=r["team"],
            player=r["player"],
            method=r["method"],
        )
        for r in _read_rows(
            directory / "stat_events.csv",
            ["match_id", "clock", "kind", "team", "player", "method"],
        )
    )
    players = tuple(
        PlayerRow(
            name=r["name"],
            nationality=r["nationality"],
            height_cm=int(r["height_cm"]),
            birthdate=date.fromisoformat(r["birthdate"]),
        )
        for r in _read_rows(
            directory / "players.csv",
            ["name", "nationality", "height_cm", "birthdate"],
        )
    )
    return StatStore(matches=matches, stat_events=stat_events, players=players)


def dump_store(store: StatStore, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / "matches.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["match_id", "home", "away", "league", "season", "kickoff",
                         "score_home", "score_away"])
        for m in store.matches:
            writer.writerow([m.match_id, m.home, m.away, m.league, m.season,
                             m.kickoff.isoformat(), m.score_home, m.score_away])
    with open(directory / "stat_events.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["match_id", "clock", "kind", "team", "player", "method"])
        for e in store.stat_events:
            writer.writerow([e.match_id, str(e.clock), e.kind, e.team, e.player, e.method])
    with open(directory / "players.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "nationality", "height_cm", "birthdate"])
        for p in store.players:
            writer.writerow([p.name, p.nationality, p.height_cm, p.birthdate.isoformat()])
