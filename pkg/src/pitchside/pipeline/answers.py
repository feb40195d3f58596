"""Parsing reasoner responses into alignment answers.

Two response formats are accepted: a JSON object carrying the grounding
segment and answer fields, or ``<think>...</think><answer>X</answer>``
tags with a letter choice.  Whichever well-formed block appears first
in the text wins.  Answers map through the ordered option list, so a
prediction can never name anything outside the stated lineups.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from ..errors import MalformedResponse, UnknownOption

_ANSWER_TAG_RE = re.compile(r"<answer>\s*(.*?)\s*</answer>", re.DOTALL | re.IGNORECASE)
_LETTER_RE = re.compile(r"^[A-Za-z]$")

RANKED_LIST_KEY = "top3"  # fixed key for the optional ranked list


@dataclass(frozen=True, slots=True)
class AlignmentAnswer:
    """Resolved prediction: the chosen option token and its index."""

    predicted: str
    index: int
    grounding_seconds: tuple[float, ...] | None = None
    top3: tuple[str, ...] | None = None


def _find_json_block(text: str) -> tuple[int, dict] | None:
    decoder = json.JSONDecoder()
    for start, char in enumerate(text):
        if char != "{":
            continue
        try:
            value, _ = decoder.raw_decode(text[start:])
        except json.JSONDecodeError:
            continue
        if isinstance(value, dict) and "answer" in value:
            return start, value
    return None


def _resolve_option(token, options: tuple[str, ...]) -> int:
    if not isinstance(token, str):
        raise UnknownOption(f"answer {token!r} is not a string")
    text = token.strip().strip(".:)")
    lowered = text.casefold()
    for index, option in enumerate(options):
        if lowered == option.casefold():
            return index
    if _LETTER_RE.match(text):
        index = ord(text.upper()) - ord("A")
        if 0 <= index < len(options):
            return index
        raise UnknownOption(
            f"letter {text!r} is out of range for {len(options)} options"
        )
    raise UnknownOption(f"answer {token!r} does not name any option")


def _grounding_from(value) -> tuple[float, ...] | None:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return (float(value),)
    if isinstance(value, (list, tuple)):
        seconds = []
        for item in value:
            if not isinstance(item, (int, float)) or isinstance(item, bool):
                return None
            seconds.append(float(item))
        return tuple(seconds)
    return None


def parse_alignment(response: str, options: tuple[str, ...]) -> AlignmentAnswer:
    """Extract the predicted option, grounding, and optional ranked list."""
    if len(options) not in (2, 22):
        raise MalformedResponse(
            f"option list must have 2 or 22 entries, got {len(options)}"
        )

    json_hit = _find_json_block(response)
    tag_hit = _ANSWER_TAG_RE.search(response)

    use_json = json_hit is not None and (
        tag_hit is None or json_hit[0] < tag_hit.start()
    )
    if use_json:
        _, doc = json_hit
        index = _resolve_option(doc["answer"], options)
        top3 = None
        if RANKED_LIST_KEY in doc and isinstance(doc[RANKED_LIST_KEY], list):
            top3 = tuple(
                options[_resolve_option(item, options)]
                for item in doc[RANKED_LIST_KEY][:3]
            )
        grounding = None
        for key in ("grounding", "grounding_segment", "segment"):
            if key in doc:
                grounding = _grounding_from(doc[key])
                break
        return AlignmentAnswer(
            predicted=options[index], index=index,
            grounding_seconds=grounding, top3=top3,
        )
    if tag_hit is not None:
        index = _resolve_option(tag_hit.group(1), options)
        return AlignmentAnswer(predicted=options[index], index=index)
    raise MalformedResponse("response contains neither a JSON block nor answer tags")
