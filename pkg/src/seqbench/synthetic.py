"""Synthetic rating logs sampled from planted Markov chains.

The planted chain is the test oracle for the bigram recommender and the
perplexity metric: its transition matrix and entropy rate are known, so
estimates can be checked against ground truth. Timestamps are laid out so
that the sequencer, run with the matching gap threshold, reconstructs the
sampled sequences exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .ingest import Rating, RatingLog

ROW_SUM_TOLERANCE = 1e-9
POWER_ITERATION_BUDGET = 100_000
POWER_ITERATION_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class PlantedChain:
    """A first-order Markov chain over item ids with a known transition matrix."""

    states: tuple[str, ...]
    transition_matrix: np.ndarray  # row-stochastic, shape (m, m)
    initial_distribution: np.ndarray  # shape (m,)


@dataclass(frozen=True)
class GapPattern:
    """Timestamp gaps used when emitting a log: `within` between consecutive
    steps of a sequence, `between` separating sequences of the same user.
    Any sequencer delta d with within < d <= between reconstructs the
    sampled sequences exactly; `matching_delta` is the largest such d."""

    within: int = 10
    between: int = 1000

    def __post_init__(self):
        if not 0 < self.within < self.between:
            raise ValueError("need 0 < within < between")

    @property
    def matching_delta(self) -> int:
        return self.between


def make_chain(
    states: tuple[str, ...] | list[str],
    transition_matrix,
    initial_distribution=None,
) -> PlantedChain:
    """Validate and assemble a planted chain; initial defaults to uniform."""
    matrix = np.asarray(transition_matrix, dtype=float)
    m = len(states)
    if matrix.shape != (m, m):
        raise ValueError(f"transition matrix must be {m}x{m}, got {matrix.shape}")
    if (matrix < 0).any():
        raise ValueError("transition probabilities must be non-negative")
    row_sums = matrix.sum(axis=1)
    if np.abs(row_sums - 1.0).max() > ROW_SUM_TOLERANCE:
        raise ValueError("every transition-matrix row must sum to 1")
    if initial_distribution is None:
        initial = np.full(m, 1.0 / m)
    else:
        initial = np.asarray(initial_distribution, dtype=float)
        if initial.shape != (m,) or (initial < 0).any() or abs(initial.sum() - 1.0) > ROW_SUM_TOLERANCE:
            raise ValueError("initial distribution must be a stochastic vector")
    return PlantedChain(tuple(states), matrix, initial)


def _strongly_connected(matrix: np.ndarray) -> bool:
    """Every state reachable from state 0 and vice versa on positive entries."""
    m = matrix.shape[0]

    def reachable(adjacency: np.ndarray) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            node = frontier.pop()
            for neighbor in np.nonzero(adjacency[node] > 0)[0]:
                if int(neighbor) not in seen:
                    seen.add(int(neighbor))
                    frontier.append(int(neighbor))
        return seen

    return len(reachable(matrix)) == m and len(reachable(matrix.T)) == m


def stationary_and_entropy(chain: PlantedChain) -> tuple[np.ndarray, float]:
    """Stationary distribution by power iteration, and the entropy rate in bits/step.

    Raises NoConvergence for reducible chains (stationary vector not
    unique) and for periodic chains that keep the iteration oscillating
    past the budget.
    """
    matrix = chain.transition_matrix
    if not _strongly_connected(matrix):
        raise NoConvergence("chain is reducible; the stationary distribution is not unique")

    pi = np.full(len(chain.states), 1.0 / len(chain.states))
    for _ in range(POWER_ITERATION_BUDGET):
        updated = pi @ matrix
        updated /= updated.sum()
        if np.abs(updated - pi).sum() < POWER_ITERATION_TOLERANCE:
            pi = updated
            break
        pi = updated
    else:
        raise NoConvergence(
            f"power iteration did not converge within {POWER_ITERATION_BUDGET} iterations"
        )

    safe = np.where(matrix > 0, matrix, 1.0)  # 0 * log 0 := 0
    row_entropy = -(matrix * np.log2(safe)).sum(axis=1)
    entropy_rate = float(pi @ row_entropy)
    return pi, entropy_rate


def sample_log(
    chain: PlantedChain,
    num_users: int,
    seq_per_user: int,
    seq_len: int,
    gap_pattern: GapPattern = GapPattern(),
    seed: int = 0,
) -> RatingLog:
    """Sample sequences from the chain and emit them as a rating log.

    Each user walks `seq_per_user` independent chains of `seq_len` steps.
    Sequences need at least two steps, otherwise the sequencer would
    discard them and the round-trip guarantee would not hold. All rating
    values are 1.0. Deterministic under `seed`.
    """
    if num_users < 1 or seq_per_user < 1:
        raise ValueError("num_users and seq_per_user must be at least 1")
    if seq_len < 2:
        raise ValueError("seq_len must be at least 2 so no sequence is discarded")

    rng = np.random.default_rng(seed)
    m = len(chain.states)
    ratings = []
    for user_index in range(num_users):
        user = f"su{user_index:04d}"
        clock = user_index * 1_000_000
        for _ in range(seq_per_user):
            state = int(rng.choice(m, p=chain.initial_distribution))
            for step in range(seq_len):
                if step > 0:
                    state = int(rng.choice(m, p=chain.transition_matrix[state]))
                    clock += gap_pattern.within
                ratings.append(Rating(user, chain.states[state], 1.0, clock))
            clock += gap_pattern.between
    return RatingLog(tuple(ratings))
