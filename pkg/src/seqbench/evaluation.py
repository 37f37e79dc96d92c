"""Seeded sequence generation and the eight evaluation metrics.

For every test sequence the recommender generates `k` items, seeded with
the test user and the first item of the test sequence. The remainder of
the test sequence (the reference continuation) is the ground truth; the
seed is excluded from scoring on both sides. Metric means are computed
with statistics.mean, which is exact for float inputs, so the analytic
identities of the uniform baseline (confidence = 1/|catalog|) hold
bit-for-bit.
"""

from __future__ import annotations

import math
import random
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence as SequenceType

from .errors import NoTransitions
from .profiling import Profile, profile
from .recommenders import count_items
from .sequences import Sequence, SequenceSet, make_sequence_set
from .similarity import ItemVector, build_item_vectors, cosine
from .splitting import Split

METRIC_NAMES = (
    "coverage",
    "precision",
    "ndpm",
    "diversity",
    "novelty",
    "serendipity",
    "confidence",
    "perplexity",
)

# Floor for teacher-forced probabilities; also the mass assigned to
# transitions whose target is outside the catalog.
PROB_FLOOR = 1e-10


@dataclass(frozen=True)
class GeneratedSequence:
    """The k items generated from one test case, seed excluded."""

    user: str
    seed: str
    items: tuple[str, ...]
    chosen_probs: tuple[float, ...]  # pre-masking probability of each choice


@dataclass(frozen=True)
class EvaluationReport:
    coverage: float
    precision: float
    ndpm: float
    diversity: float
    novelty: float
    serendipity: float
    confidence: float
    perplexity: float
    k: int
    profile: Profile
    config: dict

    def metrics(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def generate(model, user: str, seed_item: str, k: int, rng: random.Random) -> GeneratedSequence:
    """Grow a sequence of k items from the seed, one model query per step.

    Sampling policies draw from `rng`; the masked-argmax policy picks the
    most probable item not yet recommended (ties broken by item id), with
    the seed itself staying eligible. If every catalog item has already
    been emitted the mask resets. chosen_probs records the raw probability
    the model assigned to each pick, before any masking.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    items: list[str] = []
    probs: list[float] = []
    emitted: set[str] = set()
    current = seed_item
    for _ in range(k):
        dist = model.next_distribution(user, current)
        if model.selection_policy == "argmax_masked":
            candidates = [item for item in sorted(dist) if item not in emitted]
            if not candidates:
                candidates = sorted(dist)
            choice = max(candidates, key=dist.__getitem__)
        else:
            choice = _sample(dist, rng)
        items.append(choice)
        probs.append(dist[choice])
        emitted.add(choice)
        current = choice
    return GeneratedSequence(user=user, seed=seed_item, items=tuple(items), chosen_probs=tuple(probs))


def _sample(dist: Mapping[str, float], rng: random.Random) -> str:
    """Inverse-CDF draw over items in sorted order (deterministic under rng)."""
    u = rng.random()
    acc = 0.0
    ordered = sorted(dist)
    for item in ordered:
        acc += dist[item]
        if u < acc:
            return item
    return ordered[-1]  # guard against accumulated rounding below 1.0


def _continuation(seq: Sequence) -> tuple[str, ...]:
    """Reference items of a test sequence: everything after the seed."""
    return seq.items[1:]


def coverage(generated: SequenceType[GeneratedSequence], catalog: frozenset) -> float:
    """Fraction of the training catalog that appears in any generated sequence."""
    recommended: set[str] = set()
    for g in generated:
        recommended.update(g.items)
    return len(recommended) / len(catalog)


def precision(generated: SequenceType[GeneratedSequence], test: SequenceSet) -> float:
    """Mean fraction of recommended slots whose item is in the reference continuation."""
    scores = []
    for g, seq in zip(generated, test.sequences):
        reference = set(_continuation(seq))
        hits = sum(1 for item in g.items if item in reference)
        scores.append(hits / len(g.items))
    return statistics.mean(scores)


def ndpm(generated: SequenceType[GeneratedSequence], test: SequenceSet) -> float:
    """Pairwise order disagreement between recommendation and reference.

    Per test case, over all unordered pairs of distinct reference items:
    contradicted pairs count 1, pairs with an unrecommended member count
    1/2, and the total is normalized by the pair count. Cases with fewer
    than two distinct reference items are skipped; 0 means perfect order
    agreement, 1 total contradiction.
    """
    scores = []
    for g, seq in zip(generated, test.sequences):
        ref_pos: dict[str, int] = {}
        for item in _continuation(seq):
            ref_pos.setdefault(item, len(ref_pos))
        distinct = list(ref_pos)
        pair_count = len(distinct) * (len(distinct) - 1) // 2
        if pair_count == 0:
            continue
        rec_pos: dict[str, int] = {}
        for position, item in enumerate(g.items):
            rec_pos.setdefault(item, position)
        contradicted = 0
        unordered = 0
        for i in range(len(distinct)):
            for j in range(i + 1, len(distinct)):
                first, second = distinct[i], distinct[j]  # first precedes second in reference
                if first in rec_pos and second in rec_pos:
                    if rec_pos[first] > rec_pos[second]:
                        contradicted += 1
                else:
                    unordered += 1
        scores.append((contradicted + 0.5 * unordered) / pair_count)
    return statistics.mean(scores) if scores else 0.0


def diversity(
    generated: SequenceType[GeneratedSequence], vectors: Mapping[str, ItemVector]
) -> float:
    """Mean pairwise dissimilarity (1 - cosine) within each generated sequence."""
    scores = []
    for g in generated:
        if len(g.items) < 2:
            continue
        dissimilarities = [
            1.0 - cosine(vectors[g.items[i]], vectors[g.items[j]])
            for i in range(len(g.items))
            for j in range(i + 1, len(g.items))
        ]
        scores.append(statistics.mean(dissimilarities))
    return statistics.mean(scores) if scores else 0.0


def novelty(
    generated: SequenceType[GeneratedSequence], item_counts: Mapping[str, int]
) -> float:
    """Mean self-information, -log2(popularity), of all recommended items."""
    total = sum(item_counts.values())
    informations = [
        -math.log2(item_counts[item] / total) for g in generated for item in g.items
    ]
    return statistics.mean(informations)


def top_pop(item_counts: Mapping[str, int], k: int) -> frozenset:
    """The k most popular training items; popularity ties break by item id."""
    ranked = sorted(item_counts, key=lambda item: (-item_counts[item], item))
    return frozenset(ranked[:k])


def serendipity(
    generated: SequenceType[GeneratedSequence],
    test: SequenceSet,
    item_counts: Mapping[str, int],
    k: int,
) -> float:
    """Precision that treats the k most popular items as irrelevant."""
    popular = top_pop(item_counts, k)
    scores = []
    for g, seq in zip(generated, test.sequences):
        reference = set(_continuation(seq))
        hits = sum(1 for item in g.items if item in reference and item not in popular)
        scores.append(hits / len(g.items))
    return statistics.mean(scores)


def confidence(generated: SequenceType[GeneratedSequence]) -> float:
    """Mean probability the model assigned to its own choices."""
    return statistics.mean([p for g in generated for p in g.chosen_probs])


def perplexity(model, test: SequenceSet) -> float:
    """2 to the cross-entropy per transition, teacher-forced on the test set.

    Every consecutive pair (x_t, x_t+1) of every test sequence contributes
    log2 p(x_t+1 | user, x_t) with the ground-truth x_t as the condition.
    Probabilities are clamped below at PROB_FLOOR; targets outside the
    catalog contribute exactly PROB_FLOOR.
    """
    log_probs = []
    for seq in test.sequences:
        items = seq.items
        for source, target in zip(items, items[1:]):
            dist = model.next_distribution(seq.user, source)
            p = max(dist.get(target, 0.0), PROB_FLOOR)
            log_probs.append(math.log2(p))
    if not log_probs:
        raise NoTransitions("test set has no consecutive transitions")
    return 2.0 ** (-statistics.mean(log_probs))


def evaluate(
    model, split: Split, k: int, master_seed: int, workers: int = 1
) -> EvaluationReport:
    """Generate one sequence per test case and compute all eight metrics.

    Each test sequence gets its own RNG stream derived from (master_seed,
    sequence index), so results do not depend on `workers`, the thread
    count of the generation loop.
    """
    test = split.test
    cases = list(enumerate(test.sequences))

    def generate_one(case: tuple[int, Sequence]) -> GeneratedSequence:
        index, seq = case
        rng = random.Random(f"{master_seed}/{index}")
        return generate(model, seq.user, seq.items[0], k, rng)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            generated = list(pool.map(generate_one, cases))
    else:
        generated = [generate_one(case) for case in cases]

    vectors = build_item_vectors(split.train)
    item_counts = count_items(split.train)
    full_set = make_sequence_set(split.train.sequences + test.sequences)
    prof = profile(full_set, full_set.total_steps)

    return EvaluationReport(
        coverage=coverage(generated, split.train.catalog),
        precision=precision(generated, test),
        ndpm=ndpm(generated, test),
        diversity=diversity(generated, vectors),
        novelty=novelty(generated, item_counts),
        serendipity=serendipity(generated, test, item_counts, k),
        confidence=confidence(generated),
        perplexity=perplexity(model, test),
        k=k,
        profile=prof,
        config={
            "recommender": getattr(model, "kind", type(model).__name__),
            "smoothing_alpha": getattr(model, "smoothing_alpha", 0.0),
            "split_strategy": split.strategy,
            "test_ratio": split.test_ratio,
            "split_seed": split.seed,
            "k": k,
            "master_seed": master_seed,
        },
    )
