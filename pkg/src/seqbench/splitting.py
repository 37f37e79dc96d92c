"""Partitioning of sequences into training and test sets."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import DegenerateSplit
from .sequences import SequenceSet, make_sequence_set

STRATEGIES = ("random", "timestamp")


@dataclass(frozen=True)
class Split:
    train: SequenceSet
    test: SequenceSet
    strategy: str
    test_ratio: float
    seed: int


def split(
    sequence_set: SequenceSet, strategy: str, test_ratio: float, seed: int = 0
) -> Split:
    """Partition a sequence set; the test side gets ceil(test_ratio * n) sequences.

    'random' shuffles deterministically under `seed` and sends the tail to
    test; 'timestamp' sorts ascending by start time (ties by user id) and
    sends the latest sequences to test, ignoring the seed. Both sides come
    back in the canonical (user, start) order of SequenceSet.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if not 0.0 < test_ratio < 1.0:
        raise ValueError(f"test_ratio must be in (0, 1), got {test_ratio}")

    n = len(sequence_set)
    if n < 2:
        raise DegenerateSplit(f"cannot split {n} sequence(s) into train and test")
    n_test = math.ceil(test_ratio * n)
    if n_test >= n:
        raise DegenerateSplit(
            f"test_ratio={test_ratio} takes all {n} sequences, leaving train empty"
        )

    if strategy == "random":
        order = list(sequence_set.sequences)
        random.Random(seed).shuffle(order)
    else:
        order = sorted(sequence_set.sequences, key=lambda s: (s.start, s.user))

    train = make_sequence_set(order[: n - n_test])
    test = make_sequence_set(order[n - n_test :])
    return Split(train=train, test=test, strategy=strategy, test_ratio=test_ratio, seed=seed)
