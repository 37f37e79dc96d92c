"""Item vectors and the cosine similarity used by the diversity metric.

Items are encoded by sequence incidence: component s of an item's vector
is 1 iff the item occurs in training sequence s. Incidence is computable
from any rating file, so it stands in for content features; swap in real
content vectors by producing the same ItemVector shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroVector
from .sequences import SequenceSet


@dataclass(frozen=True)
class ItemVector:
    """Sparse binary vector: the set of training-sequence indices holding the item."""

    item: str
    components: frozenset[int]
    dimension: int


def build_item_vectors(train: SequenceSet) -> dict[str, ItemVector]:
    """Binary incidence vectors over the training sequences."""
    membership: dict[str, set[int]] = {}
    for index, seq in enumerate(train.sequences):
        for item in set(seq.items):
            membership.setdefault(item, set()).add(index)
    dimension = len(train.sequences)
    return {
        item: ItemVector(item, frozenset(indices), dimension)
        for item, indices in membership.items()
    }


def cosine(u: ItemVector, v: ItemVector) -> float:
    """Cosine of two incidence vectors; stays in [0, 1] for binary vectors."""
    if not u.components or not v.components:
        raise ZeroVector(f"zero vector for item {u.item if not u.components else v.item!r}")
    overlap = len(u.components & v.components)
    return overlap / math.sqrt(len(u.components) * len(v.components))
