"""Recursive-descent parser for the statistics query DSL.

Grammar (keywords case-insensitive, names quoted)::

    COUNT <stat> (PLAYER|TEAM) "<name>" [METHOD <m>] [SEASON <s>]
          [LEAGUE "<l>"] BEFORE <ISO-date>
    LIST MATCHES TEAM "<name>" [SEASON <s>] [LEAGUE "<l>"] BEFORE <date>
    RECORD TEAM "<name>" [SEASON <s>] [LEAGUE "<l>"] BEFORE <date>
    LAST <n> RESULTS TEAM "<name>" [SEASON <s>] [LEAGUE "<l>"] BEFORE <date>

The optional clauses may appear in any order, each at most once.  The
BEFORE clause is mandatory: a missing temporal bound is a hard error,
never a default.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import date, datetime

from ..errors import MissingBefore, QuerySyntaxError
from .query import GoalMethod, StatQuery, SubjectType, Verb

_TOKEN_RE = re.compile(r'"([^"]*)"|(\S+)')


@dataclass(frozen=True, slots=True)
class _Token:
    text: str
    position: int
    quoted: bool


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        quoted = m.group(1) is not None
        tokens.append(_Token(m.group(1) if quoted else m.group(2), m.start(), quoted))
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index].position
        return len(self.text)

    def done(self) -> bool:
        return self.index >= len(self.tokens)

    def next(self, expected: str) -> _Token:
        if self.done():
            raise QuerySyntaxError(f"expected {expected}, found end of input", self.position)
        token = self.tokens[self.index]
        self.index += 1
        return token

    def keyword(self, *names: str) -> str:
        token = self.next(" or ".join(names))
        word = token.text.upper()
        if token.quoted or word not in names:
            raise QuerySyntaxError(
                f"expected {' or '.join(names)}, found {token.text!r}", token.position
            )
        return word

    def quoted(self, what: str) -> str:
        token = self.next(f'quoted {what}')
        if not token.quoted:
            raise QuerySyntaxError(f"{what} must be quoted, found {token.text!r}", token.position)
        if not token.text:
            raise QuerySyntaxError(f"{what} must be non-empty", token.position)
        return token.text


def _parse_as_of(token: _Token) -> datetime:
    try:
        return datetime.combine(date.fromisoformat(token.text), datetime.min.time())
    except ValueError:
        pass
    try:
        return datetime.fromisoformat(token.text)
    except ValueError:
        raise QuerySyntaxError(
            f"BEFORE needs an ISO date or datetime, found {token.text!r}", token.position
        ) from None


def _parse_clauses(cursor: _Cursor, allow_method: bool) -> dict:
    fields: dict = {}
    while not cursor.done():
        token = cursor.next("clause keyword")
        word = token.text.upper()
        if token.quoted or word not in ("METHOD", "SEASON", "LEAGUE", "BEFORE"):
            raise QuerySyntaxError(f"unexpected token {token.text!r}", token.position)
        if word == "METHOD" and not allow_method:
            raise QuerySyntaxError("METHOD is only valid for COUNT queries", token.position)
        key = {"METHOD": "method", "SEASON": "season", "LEAGUE": "league", "BEFORE": "as_of"}[word]
        if key in fields:
            raise QuerySyntaxError(f"duplicate {word} clause", token.position)
        if word == "METHOD":
            value_token = cursor.next("a method")
            try:
                fields[key] = GoalMethod(value_token.text.lower())
            except ValueError:
                raise QuerySyntaxError(
                    f"unknown method {value_token.text!r}", value_token.position
                ) from None
        elif word == "SEASON":
            fields[key] = cursor.next("a season token").text
        elif word == "LEAGUE":
            fields[key] = cursor.quoted("league name")
        else:
            fields[key] = _parse_as_of(cursor.next("an ISO date"))
    return fields


def parse_query(text: str) -> StatQuery:
    """Parse one DSL line into a query AST; ``parse(print(ast)) == ast``."""
    cursor = _Cursor(text)
    if cursor.done():
        raise QuerySyntaxError("empty query", 0)

    verb_word = cursor.keyword("COUNT", "LIST", "RECORD", "LAST")
    stat: str | None = None
    n: int | None = None
    if verb_word == "COUNT":
        verb = Verb.COUNT
        stat_token = cursor.next("a statistic")
        if stat_token.quoted:
            raise QuerySyntaxError("statistic must be a bare word", stat_token.position)
        stat = stat_token.text.lower()
        subject_type = SubjectType[cursor.keyword("PLAYER", "TEAM")]
    elif verb_word == "LIST":
        verb = Verb.LIST_MATCHES
        cursor.keyword("MATCHES")
        cursor.keyword("TEAM")
        subject_type = SubjectType.TEAM
    elif verb_word == "RECORD":
        verb = Verb.TEAM_RECORD
        cursor.keyword("TEAM")
        subject_type = SubjectType.TEAM
    else:
        verb = Verb.LAST_N_RESULTS
        n_token = cursor.next("a count")
        if not n_token.text.isdigit() or int(n_token.text) < 1:
            raise QuerySyntaxError(
                f"LAST needs a positive integer, found {n_token.text!r}", n_token.position
            )
        n = int(n_token.text)
        cursor.keyword("RESULTS")
        cursor.keyword("TEAM")
        subject_type = SubjectType.TEAM

    subject = cursor.quoted("subject name")
    fields = _parse_clauses(cursor, allow_method=verb is Verb.COUNT)
    if "as_of" not in fields:
        raise MissingBefore("query lacks the mandatory BEFORE clause")
    return StatQuery(
        verb=verb,
        subject_type=subject_type,
        subject=subject,
        stat=stat,
        n=n,
        method=fields.get("method", GoalMethod.ANY),
        season=fields.get("season"),
        league=fields.get("league"),
        as_of=fields["as_of"],
    )
