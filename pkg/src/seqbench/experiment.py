"""End-to-end experiment runner shared by the CLI and the service.

One pipeline pass (parse, filter, sequence, profile, split), then every
selected recommender is fitted on the same training set and evaluated
with the same master seed, so metric differences reflect the models and
not sampling variance.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .config import ExperimentConfig
from .errors import DataError
from .evaluation import EvaluationReport, evaluate
from .ingest import apply_support_filters, parse_ratings
from .profiling import Profile, profile
from .recommenders import fit
from .sequences import build_sequences
from .splitting import split

THREADS_ENV_VAR = "SEQBENCH_THREADS"


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    profile: Profile
    reports: tuple[tuple[str, EvaluationReport], ...]  # (kind, report), config order


def evaluation_workers() -> int:
    """Worker cap from SEQBENCH_THREADS; defaults to 1, never below 1."""
    raw = os.environ.get(THREADS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Validate, run the pipeline once, then fit and evaluate each recommender."""
    config.validate()
    workers = evaluation_workers()

    try:
        with open(config.input_path, "r", encoding="utf-8") as handle:
            log = parse_ratings(handle, config.delimiter)
    except OSError as exc:
        raise DataError(f"cannot read {config.input_path}: {exc}") from exc

    filtered = apply_support_filters(log, config.min_user_ratings, config.min_item_ratings)
    sequence_set = build_sequences(filtered, config.delta_seconds)
    prof = profile(sequence_set, sequence_set.total_steps)
    partition = split(sequence_set, config.split_strategy, config.test_ratio, config.seed)

    reports = []
    for kind in config.recommenders:
        model = fit(kind, partition.train, config.smoothing_alpha)
        report = evaluate(model, partition, config.k, master_seed=config.seed, workers=workers)
        reports.append((kind, report))
    return ExperimentResult(config=config, profile=prof, reports=tuple(reports))
