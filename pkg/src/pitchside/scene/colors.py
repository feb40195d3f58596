"""Team-affiliation color resolution from free-text kit descriptions.

Color phrases coming out of a captioning model vary wildly ("red and
blue" vs "blue and red striped").  Normalization lowercases, tokenizes,
maps synonyms, drops filler words, and sorts, so equivalent phrasings
collapse to one canonical label.  Claims then vote per side against the
known traditional colors; when a claim's color is compatible with both
sides (the light-blue vs dark-blue derby problem) a jersey number that
exists in exactly one lineup decides.  Remaining conflicts are returned
as an AmbiguityReport for manual resolution, never raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from ..events.types import PlayerRef, Side

# words that describe pattern or garment, not hue
_FILLER = {
    "and", "with", "striped", "stripes", "stripe", "hooped", "hoops",
    "jersey", "jerseys", "kit", "kits", "shirt", "shirts", "colored",
    "coloured", "plain", "solid", "team",
}

# token rewrites applied before sorting; a token may expand to several
_SYNONYMS: dict[str, tuple[str, ...]] = {
    "crimson": ("red",),
    "scarlet": ("red",),
    "navy": ("dark", "blue"),
    "sky": ("light", "blue"),
    "grey": ("gray",),
    "golden": ("gold",),
    "whites": ("white",),
}


def normalize_color(text: str) -> tuple[str, ...]:
    """Canonical sorted token tuple for a free-text color phrase."""
    raw = [t for t in "".join(c if c.isalpha() else " " for c in text.lower()).split()]
    tokens: set[str] = set()
    for token in raw:
        if token in _FILLER:
            continue
        tokens.update(_SYNONYMS.get(token, (token,)))
    return tuple(sorted(tokens))


def canonical_color(text: str) -> str:
    return " ".join(normalize_color(text))


def _compatible(a: tuple[str, ...], b: tuple[str, ...]) -> bool:
    sa, sb = set(a), set(b)
    return bool(sa) and bool(sb) and (sa <= sb or sb <= sa)


@dataclass(frozen=True, slots=True)
class ColorClaim:
    """One observed kit color, optionally tagged with a spotted jersey number."""

    color_text: str
    number: int | None = None


@dataclass(frozen=True, slots=True)
class ColorResolution:
    home: str
    away: str
    notes: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class AmbiguityReport:
    """Unresolved affiliation; lists the candidate colors seen per side."""

    home_candidates: tuple[str, ...]
    away_candidates: tuple[str, ...]
    message: str


def _pick(counter: Counter, known: str) -> tuple[str | None, tuple[str, ...]]:
    """Plurality winner; vote ties break toward the side's known color."""
    if not counter:
        return None, ()
    ranked = counter.most_common()
    top_count = ranked[0][1]
    leaders = sorted(color for color, count in ranked if count == top_count)
    if len(leaders) == 1:
        return leaders[0], tuple(leaders)
    if known in leaders:
        return known, tuple(leaders)
    return None, tuple(leaders)


def resolve_team_colors(
    claims: Iterable[ColorClaim],
    lineups: tuple[Iterable[PlayerRef], Iterable[PlayerRef]],
    known_colors: tuple[str, str],
) -> ColorResolution | AmbiguityReport:
    """Assign one canonical color per side, or report the ambiguity.

    ``lineups`` and ``known_colors`` are (home, away) pairs; known colors
    are the teams' traditional colors used for cross-checking.
    """
    claims = list(claims)
    if not claims:
        raise ValueError("at least one color claim is required")

    known = {
        Side.HOME: normalize_color(known_colors[0]),
        Side.AWAY: normalize_color(known_colors[1]),
    }
    numbers = {
        Side.HOME: {p.number for p in lineups[0]},
        Side.AWAY: {p.number for p in lineups[1]},
    }

    votes: dict[Side, Counter] = {Side.HOME: Counter(), Side.AWAY: Counter()}
    number_votes: dict[Side, Counter] = {Side.HOME: Counter(), Side.AWAY: Counter()}
    leftover: list[str] = []
    notes: list[str] = []

    for claim in claims:
        tokens = normalize_color(claim.color_text)
        if not tokens:
            continue
        canonical = " ".join(tokens)
        number_side = None
        if claim.number is not None:
            owners = [s for s in (Side.HOME, Side.AWAY) if claim.number in numbers[s]]
            if len(owners) == 1:
                number_side = owners[0]
        if number_side is not None:
            number_votes[number_side][canonical] += 1
            notes.append(f"{number_side.value} claimed {canonical!r} via jersey number {claim.number}")
            continue
        matching = [s for s in (Side.HOME, Side.AWAY) if _compatible(tokens, known[s])]
        if len(matching) == 1:
            votes[matching[0]][canonical] += 1
        else:
            leftover.append(canonical)

    resolved: dict[Side, str | None] = {}
    candidates: dict[Side, tuple[str, ...]] = {}
    for side in (Side.HOME, Side.AWAY):
        source = number_votes[side] if number_votes[side] else votes[side]
        resolved[side], candidates[side] = _pick(source, " ".join(known[side]))

    # a decided side lets leftover claims fall to the other by elimination
    for side in (Side.HOME, Side.AWAY):
        other = side.opponent
        if resolved[side] is not None and resolved[other] is None and not candidates[other]:
            remaining = sorted({c for c in leftover if c != resolved[side]})
            if len(remaining) == 1:
                resolved[other] = remaining[0]
                candidates[other] = tuple(remaining)
                notes.append(f"{other.value} resolved to {remaining[0]!r} by elimination")

    home, away = resolved[Side.HOME], resolved[Side.AWAY]
    if home is not None and away is not None and home != away:
        return ColorResolution(home=home, away=away, notes=tuple(notes))

    def side_candidates(side: Side) -> tuple[str, ...]:
        seen = set(candidates[side]) | set(leftover)
        if resolved[side]:
            seen.add(resolved[side])
        return tuple(sorted(seen))

    if home is not None and home == away:
        message = f"both sides resolve to {home!r}"
    else:
        message = "conflicting color claims; manual resolution required"
    return AmbiguityReport(
        home_candidates=side_candidates(Side.HOME),
        away_candidates=side_candidates(Side.AWAY),
        message=message,
    )
