"""Grouping of per-user ratings into time-gap sequences.

A sequence is broken whenever the gap between two consecutive ratings of
the same user reaches the threshold delta; strictly smaller gaps keep the
ratings together. Candidate sequences of length one are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NoSequences
from .ingest import RatingLog


@dataclass(frozen=True)
class Sequence:
    """Time-ordered (item, timestamp) steps of one user."""

    user: str
    steps: tuple[tuple[str, int], ...]

    @property
    def start(self) -> int:
        return self.steps[0][1]

    @property
    def items(self) -> tuple[str, ...]:
        return tuple(item for item, _ in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class SequenceSet:
    """Sequences in canonical (user, start) order plus their catalog and users."""

    sequences: tuple[Sequence, ...]
    catalog: frozenset[str]
    users: frozenset[str]

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.sequences)

    @property
    def total_steps(self) -> int:
        return sum(len(s) for s in self.sequences)


def make_sequence_set(sequences: Iterable[Sequence]) -> SequenceSet:
    """Assemble a SequenceSet, normalizing order to (user, start)."""
    ordered = tuple(sorted(sequences, key=lambda s: (s.user, s.start)))
    catalog = frozenset(item for s in ordered for item in s.items)
    users = frozenset(s.user for s in ordered)
    return SequenceSet(ordered, catalog, users)


def build_sequences(log: RatingLog, delta: int) -> SequenceSet:
    """Group each user's ratings into sequences with gap threshold `delta`.

    Ratings are sorted per user by timestamp (ties keep input order); a new
    sequence starts whenever the gap to the previous rating is >= delta.
    Raises NoSequences when every candidate has length one.
    """
    if delta <= 0:
        raise ValueError("delta must be a positive number of seconds")

    per_user: dict[str, list] = {}
    for rating in log:
        per_user.setdefault(rating.user, []).append(rating)

    sequences = []
    for user, ratings in per_user.items():
        ordered = sorted(ratings, key=lambda r: r.timestamp)
        groups = [[ordered[0]]]
        for rating in ordered[1:]:
            if rating.timestamp - groups[-1][-1].timestamp >= delta:
                groups.append([rating])
            else:
                groups[-1].append(rating)
        for group in groups:
            if len(group) >= 2:
                steps = tuple((r.item, r.timestamp) for r in group)
                sequences.append(Sequence(user, steps))

    if not sequences:
        raise NoSequences(f"no sequence of length >= 2 exists for delta={delta}")
    return make_sequence_set(sequences)
