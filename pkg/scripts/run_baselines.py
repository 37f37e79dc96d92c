"""Run all four baselines on a rating file and print a comparison table.

A library-level variant of the CLI for interactive experimentation:
    python scripts/run_baselines.py --input data/sample.tsv --k 3 --seed 7
"""

from __future__ import annotations

import argparse

from seqbench import ExperimentConfig, run_experiment
from seqbench.evaluation import METRIC_NAMES


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", default="data/sample.tsv")
    parser.add_argument("--delta", type=int, default=86400)
    parser.add_argument("--split", default="timestamp", choices=["random", "timestamp"])
    parser.add_argument("--test-ratio", type=float, default=0.2)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    config = ExperimentConfig(
        input_path=args.input,
        delta_seconds=args.delta,
        split_strategy=args.split,
        test_ratio=args.test_ratio,
        k=args.k,
        smoothing_alpha=args.alpha,
        seed=args.seed,
    )
    result = run_experiment(config)

    prof = result.profile
    print(
        f"{prof.num_sequences} sequences, {prof.num_users} users, "
        f"{prof.num_items} items, avg length {prof.avg_sequence_length:.2f}, "
        f"sparsity {prof.sparsity:.3f}"
    )
    header = f"{'recommender':<14}" + "".join(f"{name:>13}" for name in METRIC_NAMES)
    print(header)
    for kind, report in result.reports:
        metrics = report.metrics()
        print(f"{kind:<14}" + "".join(f"{metrics[name]:>13.4f}" for name in METRIC_NAMES))


if __name__ == "__main__":
    main()
