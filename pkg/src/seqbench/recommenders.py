"""Baseline sequence recommenders.

A recommender is anything that, given a user and the current item, returns
a probability distribution over the next item drawn from the training
catalog. The four baselines here are non-personalized: the user argument
never changes their output. Third-party models plug into the evaluator by
exposing the same `next_distribution`, `selection_policy` and `catalog`
attributes as RecommenderModel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Mapping

from .errors import UnknownItem
from .sequences import SequenceSet

KINDS = ("most_popular", "random", "unigram", "bigram")
DEFAULT_ALPHA = 0.1

# item id -> probability, over the training catalog, summing to 1.
Distribution = Dict[str, float]


def count_items(sequence_set: SequenceSet) -> Counter:
    """Occurrences of each item across all sequence steps."""
    return Counter(item for seq in sequence_set for item in seq.items)


@dataclass(frozen=True)
class RecommenderModel:
    """A fitted baseline; immutable, safe to share across evaluation workers."""

    kind: str
    catalog: tuple[str, ...]  # sorted item ids of the training set
    item_counts: Mapping[str, int]
    transition_counts: Mapping[str, Mapping[str, int]]
    smoothing_alpha: float
    selection_policy: str  # "argmax_masked" or "sample"
    fallback_to_unigram: bool = True
    _catalog_set: frozenset = field(init=False, repr=False, compare=False, default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "_catalog_set", frozenset(self.catalog))

    def next_distribution(self, user: str, current_item: str) -> Distribution:
        """Probability of each catalog item being the next one.

        random: uniform; unigram and most_popular: proportional to training
        popularity; bigram: additively smoothed first-order transition
        probabilities, falling back to the unigram distribution when
        `current_item` was never seen as a transition source. UnknownItem is
        raised only for a bigram with fallback disabled and `current_item`
        outside the catalog.
        """
        if self.kind == "random":
            p = 1.0 / len(self.catalog)
            return {item: p for item in self.catalog}
        if self.kind in ("unigram", "most_popular"):
            return self._popularity_distribution()

        row = self.transition_counts.get(current_item)
        if not row:
            if current_item not in self._catalog_set and not self.fallback_to_unigram:
                raise UnknownItem(f"item {current_item!r} is outside the training catalog")
            return self._popularity_distribution()
        alpha = self.smoothing_alpha
        denom = sum(row.values()) + alpha * len(self.catalog)
        return {item: (row.get(item, 0) + alpha) / denom for item in self.catalog}

    def _popularity_distribution(self) -> Distribution:
        total = sum(self.item_counts.values())
        return {item: self.item_counts[item] / total for item in self.catalog}


def fit(
    kind: str,
    train: SequenceSet,
    smoothing_alpha: float = DEFAULT_ALPHA,
    fallback_to_unigram: bool = True,
) -> RecommenderModel:
    """Fit one of the four baselines on the training sequences.

    Popularity counts raw step occurrences; bigram transition counts cover
    consecutive pairs within each sequence, never across sequences.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown recommender kind {kind!r}, expected one of {KINDS}")
    if len(train) == 0:
        raise ValueError("cannot fit on an empty training set")
    if smoothing_alpha < 0:
        raise ValueError("smoothing_alpha must be non-negative")

    item_counts = count_items(train)
    transition_counts: dict[str, dict[str, int]] = {}
    if kind == "bigram":
        for seq in train:
            items = seq.items
            for source, target in zip(items, items[1:]):
                row = transition_counts.setdefault(source, {})
                row[target] = row.get(target, 0) + 1

    return RecommenderModel(
        kind=kind,
        catalog=tuple(sorted(train.catalog)),
        item_counts=dict(item_counts),
        transition_counts=transition_counts,
        smoothing_alpha=smoothing_alpha,
        selection_policy="argmax_masked" if kind == "most_popular" else "sample",
        fallback_to_unigram=fallback_to_unigram,
    )
