"""Structural composition tally over per-sentence label sets.

Commentary sentences are labeled description, explanation, or comment;
a sentence may combine categories, in which case it contributes equal
fractions to each.  Professional televised commentary keeps description
below half of the total, which is the flag this tally reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import SchemaError, UnlabeledSentence

CATEGORIES = ("description", "explanation", "comment")
DESCRIPTION_CEILING = 50.0

_ALIASES = {
    "description": "description",
    "explanation": "explanation",
    "comment": "comment",
    "commentary": "comment",
}


@dataclass(frozen=True, slots=True)
class StructuralTally:
    sentence_count: int
    percentages: dict[str, float]

    @property
    def below_half_description(self) -> bool:
        return self.percentages["description"] < DESCRIPTION_CEILING

    def to_doc(self) -> dict:
        return {
            "sentences": self.sentence_count,
            "percentages": dict(self.percentages),
            "description_below_half": self.below_half_description,
        }


def structural_tally(sentence_labels: Iterable[Sequence[str]]) -> StructuralTally:
    """Fractional label shares as percentages summing to 100."""
    shares = {category: 0.0 for category in CATEGORIES}
    count = 0
    for index, labels in enumerate(sentence_labels):
        normalized = []
        for label in labels:
            key = _ALIASES.get(str(label).strip().casefold())
            if key is None:
                raise SchemaError(f"sentence {index}: unknown label {label!r}")
            normalized.append(key)
        if not normalized:
            raise UnlabeledSentence(f"sentence {index} carries no label")
        weight = 1.0 / len(normalized)
        for key in normalized:
            shares[key] += weight
        count += 1
    if count == 0:
        raise UnlabeledSentence("no sentences supplied")
    percentages = {key: 100.0 * value / count for key, value in shares.items()}
    return StructuralTally(sentence_count=count, percentages=percentages)
