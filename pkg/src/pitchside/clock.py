"""Match clocks as (half, seconds-within-half) pairs.

Integer pairs give a total order without string comparison.  The text
form used by log files and the CLI is ``"H - MM:SS"``; ``"H:MM:SS"``
and ``"H-MM:SS"`` are accepted on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SchemaError

HALF_SECONDS = 3600  # offsets above 60:00 (extra time) are out of scope

_CLOCK_RE = re.compile(r"^\s*([12])\s*[-:]\s*(\d{1,3}):([0-5]\d)\s*$")


@dataclass(frozen=True, order=True, slots=True)
class Clock:
    half: int
    offset_s: int

    def __post_init__(self) -> None:
        if self.half not in (1, 2):
            raise SchemaError(f"half must be 1 or 2, got {self.half}")
        if not 0 <= self.offset_s <= HALF_SECONDS:
            raise SchemaError(
                f"offset_s must be within [0, {HALF_SECONDS}], got {self.offset_s}"
            )

    @property
    def absolute_s(self) -> int:
        """Seconds from kickoff, second half starting at 3600."""
        return (self.half - 1) * HALF_SECONDS + self.offset_s

    def __str__(self) -> str:
        minutes, seconds = divmod(self.offset_s, 60)
        return f"{self.half} - {minutes:02d}:{seconds:02d}"


KICKOFF = Clock(1, 0)
FULL_TIME = Clock(2, HALF_SECONDS)


def parse_clock(text: str) -> Clock:
    """Parse ``"H - MM:SS"`` (also ``H:MM:SS`` / ``H-MM:SS``) into a Clock."""
    m = _CLOCK_RE.match(text)
    if not m:
        raise SchemaError(f"cannot parse clock {text!r}; expected 'H - MM:SS'")
    half, minutes, seconds = int(m.group(1)), int(m.group(2)), int(m.group(3))
    return Clock(half, minutes * 60 + seconds)


def format_clock(clock: Clock) -> str:
    return str(clock)
