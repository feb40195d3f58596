"""Rule-based extraction of checkable claims from commentary text.

Two claim kinds come out of free text: scoreline mentions ("the score
remains 1-1") and event-count mentions ("their fifth corner of the
match", "three yellow cards").  Count phrases are scoped to the nearest
preceding team or player name in the sentence when one is present.
External-statistics claims are never mined from prose; they arrive as
structured side annotations carrying a DSL query and the claimed value.

The number vocabulary covers one through ten, both cardinal and
ordinal, plus corpus misspellings ("forth" for fourth).  Phrases that
describe score deficits ("two goals down") or season-level tallies
("his three goals this season") are not in-match event counts and are
skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class ClaimKind(str, Enum):
    SCORELINE = "scoreline"
    ORDINAL_EVENT_COUNT = "ordinal_event_count"
    EXTERNAL_STAT = "external_stat"


@dataclass(frozen=True, slots=True)
class ClaimContext:
    """Entity names the extractor may scope counts to."""

    home_name: str
    away_name: str
    player_names: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Claim:
    kind: ClaimKind
    span: tuple[int, int]
    text: str
    score: tuple[int, int] | None = None
    count: int | None = None
    event_kind: str | None = None
    team: str | None = None
    player: str | None = None
    query_text: str | None = None
    claimed_value: str | None = None


NUMBER_WORDS = {
    "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10,
    "first": 1, "second": 2, "third": 3, "fourth": 4, "forth": 4,
    "fifth": 5, "sixth": 6, "seventh": 7, "eighth": 8, "ninth": 9,
    "tenth": 10,
}

# longest phrases first so "yellow card" wins over "card"
EVENT_NOUNS: tuple[tuple[tuple[str, ...], str], ...] = (
    (("yellow", "cards"), "yellow_card"),
    (("yellow", "card"), "yellow_card"),
    (("red", "cards"), "red_card"),
    (("red", "card"), "red_card"),
    (("corner", "kicks"), "corner"),
    (("corner", "kick"), "corner"),
    (("free", "kicks"), "free_kick"),
    (("free", "kick"), "free_kick"),
    (("corners",), "corner"),
    (("corner",), "corner"),
    (("goals",), "goal"),
    (("goal",), "goal"),
    (("cards",), "card"),
    (("card",), "card"),
    (("bookings",), "card"),
    (("booking",), "card"),
    (("fouls",), "foul"),
    (("foul",), "foul"),
    (("offsides",), "offside"),
    (("offside",), "offside"),
    (("penalties",), "penalty"),
    (("penalty",), "penalty"),
)

# a "corner flag" is furniture, not an event
_NOUN_BLOCKERS = {("corner",): ("flag",)}

# deficit/advantage phrasing: the number is a score gap, not an event count
_GAP_WORDS = {"down", "up", "behind", "ahead", "clear", "adrift", "lead",
              "advantage", "cushion", "deficit"}
# season-level tallies are external statistics, not in-match counts
_SEASON_WORDS = {"season", "seasons", "campaign", "career"}

_SCORE_RE = re.compile(r"(?<![\d-])(\d{1,2})\s*-\s*(\d{1,2})(?![\d-])")
_SCORE_VOCAB = {
    "score", "scores", "scoreline", "scored", "lead", "leads", "leading",
    "trail", "trails", "trailing", "stands", "remains", "level", "ahead",
    "behind", "advantage", "extend", "extends", "extended", "up", "down",
    "win", "winning", "draw", "drawn", "tied",
}

_SENTENCE_RE = re.compile(r"[^.!?]+[.!?]*")
_WORD_RE = re.compile(r"[A-Za-z']+")


def _sentences(body: str):
    for match in _SENTENCE_RE.finditer(body):
        yield match.start(), match.group(0)


def _nearest_entity(sentence: str, before: int, context: ClaimContext):
    """Latest-ending entity occurrence before the given offset; players win
    over teams when both end at the same place."""
    lowered = sentence.casefold()
    best: tuple[int, str, str] | None = None  # (end, field, name)
    for field, names in (("player", context.player_names),
                         ("team", (context.home_name, context.away_name))):
        for name in names:
            if not name:
                continue
            target = name.casefold()
            start = 0
            while True:
                hit = lowered.find(target, start)
                if hit < 0 or hit >= before:
                    break
                end = hit + len(target)
                if end <= before and (best is None or end > best[0]
                                      or (end == best[0] and field == "player")):
                    best = (end, field, name)
                start = hit + 1
    if best is None:
        return None, None
    _, field, name = best
    return (name, None) if field == "team" else (None, name)


def _match_noun(words: list[tuple[str, int, int]], index: int):
    """Try to match an event-noun phrase starting at word ``index``."""
    for phrase, kind in EVENT_NOUNS:
        end = index + len(phrase)
        if end > len(words):
            continue
        if tuple(w[0] for w in words[index:end]) != phrase:
            continue
        blockers = _NOUN_BLOCKERS.get(phrase, ())
        if blockers and end < len(words) and words[end][0] in blockers:
            continue
        return kind, end
    return None, index


def _extract_counts(offset: int, sentence: str, context: ClaimContext) -> list[Claim]:
    words = [(m.group(0).casefold(), m.start(), m.end())
             for m in _WORD_RE.finditer(sentence)]
    texts = [w[0] for w in words]
    claims = []
    for i, (word, w_start, w_end) in enumerate(words):
        if word not in NUMBER_WORDS:
            continue
        count = NUMBER_WORDS[word]
        kind, noun_end = _match_noun(words, i + 1)
        if kind is None:
            # "fifth of the match": bind to the nearest preceding event noun
            if texts[i + 1:i + 4] != ["of", "the", "match"] and \
                    texts[i + 1:i + 4] != ["of", "the", "game"]:
                continue
            for back in range(i - 1, -1, -1):
                candidate, cand_end = _match_noun(words, back)
                if candidate is not None and cand_end <= i:
                    kind, noun_end = candidate, i + 1
                    break
            if kind is None:
                continue
        following = texts[noun_end:noun_end + 3]
        if any(token in _GAP_WORDS for token in following):
            continue
        if any(token in _SEASON_WORDS for token in texts[noun_end:noun_end + 8]):
            continue
        team, player = _nearest_entity(sentence, w_start, context)
        claims.append(Claim(
            kind=ClaimKind.ORDINAL_EVENT_COUNT,
            span=(offset + w_start, offset + words[min(noun_end, len(words)) - 1][2]),
            text=sentence[w_start:words[min(noun_end, len(words)) - 1][2]],
            count=count,
            event_kind=kind,
            team=team,
            player=player,
        ))
    return claims


def _extract_scorelines(offset: int, sentence: str) -> list[Claim]:
    tokens = {m.group(0).casefold() for m in _WORD_RE.finditer(sentence)}
    if not tokens & _SCORE_VOCAB:
        return []
    claims = []
    for match in _SCORE_RE.finditer(sentence):
        claims.append(Claim(
            kind=ClaimKind.SCORELINE,
            span=(offset + match.start(), offset + match.end()),
            text=match.group(0),
            score=(int(match.group(1)), int(match.group(2))),
        ))
    return claims


def extract_claims(body: str, context: ClaimContext) -> list[Claim]:
    """All scoreline and event-count claims found in the body, in order."""
    claims: list[Claim] = []
    for offset, sentence in _sentences(body):
        claims.extend(_extract_scorelines(offset, sentence))
        claims.extend(_extract_counts(offset, sentence, context))
    return sorted(claims, key=lambda c: c.span)


def external_claim(query_text: str, claimed_value: str,
                   span: tuple[int, int] = (0, 0), text: str = "") -> Claim:
    """Build a structured external-statistics claim (never mined from prose)."""
    return Claim(
        kind=ClaimKind.EXTERNAL_STAT,
        span=span,
        text=text or query_text,
        query_text=query_text,
        claimed_value=claimed_value,
    )
