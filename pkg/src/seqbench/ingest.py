"""Rating-file parsing and minimum-support filtering.

The input format is one interaction per line with four delimiter-separated
fields: user id, item id, rating value, epoch timestamp. Lines starting
with '#' and blank lines are skipped.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyAfterFilter, EmptyInput, MalformedLine

DELIMITERS = {"tab": "\t", "comma": ",", "space": " "}


@dataclass(frozen=True)
class Rating:
    """One (user, item, value, timestamp) interaction."""

    user: str
    item: str
    value: float
    timestamp: int


@dataclass(frozen=True)
class RatingLog:
    """Ratings in original input order."""

    ratings: tuple[Rating, ...]

    def __len__(self) -> int:
        return len(self.ratings)

    def __iter__(self) -> Iterator[Rating]:
        return iter(self.ratings)


def parse_ratings(source: Iterable[str] | str, delimiter: str = "tab") -> RatingLog:
    """Parse delimiter-separated rating lines into a RatingLog.

    `source` is a string or an iterable of lines (e.g. an open file).
    `delimiter` is one of 'tab', 'comma' or 'space'; space mode splits on
    runs of whitespace. Raises MalformedLine for any line that does not
    yield a valid rating and EmptyInput if nothing was parsed.
    """
    if delimiter not in DELIMITERS:
        raise ValueError(f"unknown delimiter {delimiter!r}, expected one of {sorted(DELIMITERS)}")
    sep = DELIMITERS[delimiter]
    lines = source.splitlines() if isinstance(source, str) else source

    ratings = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if delimiter == "space":
            fields = line.split()
        else:
            fields = [field.strip() for field in line.split(sep)]
        if len(fields) != 4:
            raise MalformedLine(line_no, f"expected 4 fields, found {len(fields)}")
        user, item, value_text, ts_text = fields
        if not user or not item:
            raise MalformedLine(line_no, "empty user or item id")
        try:
            value = float(value_text)
        except ValueError:
            raise MalformedLine(line_no, f"non-numeric rating value {value_text!r}") from None
        if not math.isfinite(value):
            raise MalformedLine(line_no, f"non-finite rating value {value_text!r}")
        try:
            timestamp = int(ts_text)
        except ValueError:
            raise MalformedLine(line_no, f"non-integer timestamp {ts_text!r}") from None
        if timestamp < 0:
            raise MalformedLine(line_no, f"negative timestamp {timestamp}")
        ratings.append(Rating(user, item, value, timestamp))

    if not ratings:
        raise EmptyInput("no ratings found in input")
    return RatingLog(tuple(ratings))


def serialize_ratings(log: RatingLog, delimiter: str = "tab") -> str:
    """Render a RatingLog back to the line format accepted by parse_ratings."""
    if delimiter not in DELIMITERS:
        raise ValueError(f"unknown delimiter {delimiter!r}, expected one of {sorted(DELIMITERS)}")
    sep = DELIMITERS[delimiter]
    lines = [
        sep.join((r.user, r.item, repr(r.value), str(r.timestamp))) for r in log
    ]
    return "\n".join(lines) + "\n"


def apply_support_filters(
    log: RatingLog, min_user_ratings: int, min_item_ratings: int
) -> RatingLog:
    """Drop ratings of under-supported users, then of under-supported items.

    Two passes, no fixpoint: the item pass counts occurrences in the
    user-filtered log, and items that fall under the threshold only because
    their users were removed are dropped. Relative order is preserved.
    Thresholds of 0 or 1 are the identity.
    """
    if min_user_ratings < 0 or min_item_ratings < 0:
        raise ValueError("support thresholds must be non-negative")

    user_counts = Counter(r.user for r in log)
    kept = [r for r in log if user_counts[r.user] >= min_user_ratings]
    item_counts = Counter(r.item for r in kept)
    kept = [r for r in kept if item_counts[r.item] >= min_item_ratings]

    if not kept:
        raise EmptyAfterFilter(
            f"no ratings left after support filters "
            f"(min_user_ratings={min_user_ratings}, min_item_ratings={min_item_ratings})"
        )
    return RatingLog(tuple(kept))
