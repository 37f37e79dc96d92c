"""Independent brute-force oracles the tests check the implementation against.

Everything here is written from the metric definitions directly, with
naive loops and no imports from the package's metric code, so a bug in
the implementation cannot hide in its own oracle.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def group_sequences_bruteforce(
    timestamped: dict[str, list[tuple[str, int]]], delta: int
) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    """Naive per-user grouping: sort, cut at gaps >= delta, drop singletons."""
    out = []
    for user, pairs in timestamped.items():
        ordered = sorted(pairs, key=lambda p: p[1])
        group: list[tuple[str, int]] = []
        groups = []
        for pair in ordered:
            if group and pair[1] - group[-1][1] >= delta:
                groups.append(group)
                group = []
            group.append(pair)
        groups.append(group)
        for g in groups:
            if len(g) >= 2:
                out.append((user, tuple(g)))
    return sorted(out, key=lambda entry: (entry[0], entry[1][0][1]))


def ndpm_bruteforce(rec_items: list[str], ref_continuation: list[str]) -> float | None:
    """Pairwise order score from the definition; None when under two distinct items."""
    distinct = []
    for item in ref_continuation:
        if item not in distinct:
            distinct.append(item)
    pairs = list(itertools.combinations(distinct, 2))
    if not pairs:
        return None
    contradicted = unordered = 0
    for a, b in pairs:
        # a precedes b in the reference by construction of `distinct`
        if a in rec_items and b in rec_items:
            if rec_items.index(a) > rec_items.index(b):
                contradicted += 1
        else:
            unordered += 1
    return (contradicted + 0.5 * unordered) / len(pairs)


def precision_bruteforce(rec_items: list[str], ref_continuation: list[str]) -> Fraction:
    hits = sum(1 for item in rec_items if item in set(ref_continuation))
    return Fraction(hits, len(rec_items))


def serendipity_bruteforce(
    rec_items: list[str],
    ref_continuation: list[str],
    item_counts: dict[str, int],
    k: int,
) -> Fraction:
    by_popularity = sorted(item_counts, key=lambda i: (-item_counts[i], i))
    popular = set(by_popularity[:k])
    hits = sum(
        1 for item in rec_items if item in set(ref_continuation) and item not in popular
    )
    return Fraction(hits, len(rec_items))


def incidence_matrix_bruteforce(
    sequences: list[list[str]],
) -> dict[str, tuple[int, ...]]:
    """Dense 0/1 incidence rows, item -> one component per sequence."""
    items = sorted({item for seq in sequences for item in seq})
    return {
        item: tuple(1 if item in seq else 0 for seq in sequences) for item in items
    }


def cosine_dense(u: tuple[int, ...], v: tuple[int, ...]) -> float:
    dot = sum(a * b for a, b in zip(u, v))
    return dot / math.sqrt(sum(a * a for a in u) * sum(b * b for b in v))


def diversity_bruteforce(
    rec_sequences: list[list[str]], incidence: dict[str, tuple[int, ...]]
) -> float:
    per_sequence = []
    for rec in rec_sequences:
        if len(rec) < 2:
            continue
        values = [
            1.0 - cosine_dense(incidence[a], incidence[b])
            for a, b in itertools.combinations(rec, 2)
        ]
        per_sequence.append(sum(values) / len(values))
    return sum(per_sequence) / len(per_sequence) if per_sequence else 0.0


def novelty_bruteforce(rec_sequences: list[list[str]], item_counts: dict[str, int]) -> float:
    total = sum(item_counts.values())
    values = [-math.log2(item_counts[item] / total) for rec in rec_sequences for item in rec]
    return sum(values) / len(values)


def perplexity_bruteforce(prob, test_sequences: list[tuple[str, list[str]]], floor: float) -> float:
    """prob(user, source, target) -> probability; teacher-forced perplexity."""
    logs = []
    for user, items in test_sequences:
        for source, target in zip(items, items[1:]):
            logs.append(math.log2(max(prob(user, source, target), floor)))
    return 2.0 ** (-sum(logs) / len(logs))
