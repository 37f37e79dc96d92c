"""Descriptive statistics of a built sequence set."""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import SequenceSet


@dataclass(frozen=True)
class Profile:
    num_users: int
    num_items: int
    num_ratings: int
    num_sequences: int
    avg_sequence_length: float
    sparsity: float


def profile(sequence_set: SequenceSet, retained_ratings: int) -> Profile:
    """Summarize a sequence set.

    `retained_ratings` is the number of ratings kept by the sequencer;
    sparsity is computed over retained ratings, not the raw input, and is
    clamped to [0, 1] (repeated items can push the raw value below zero).
    """
    num_sequences = len(sequence_set)
    num_users = len(sequence_set.users)
    num_items = len(sequence_set.catalog)
    avg_length = sequence_set.total_steps / num_sequences
    sparsity = 1.0 - retained_ratings / (num_users * num_items)
    sparsity = min(1.0, max(0.0, sparsity))
    return Profile(
        num_users=num_users,
        num_items=num_items,
        num_ratings=retained_ratings,
        num_sequences=num_sequences,
        avg_sequence_length=avg_length,
        sparsity=sparsity,
    )
