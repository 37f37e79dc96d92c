"""Command-line evaluation tool: full pipeline, reports on stdout or to a file.

Exit codes: 0 success, 2 configuration error, 3 data error.
"""

from __future__ import annotations

import argparse
import sys

from .config import OUTPUT_FORMATS, ExperimentConfig
from .errors import ConfigError, DataError
from .experiment import run_experiment
from .ingest import DELIMITERS
from .recommenders import KINDS
from .render import render
from .splitting import STRATEGIES

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqbench",
        description="Evaluate baseline sequence recommenders on a rating file.",
    )
    parser.add_argument("--input", required=True, help="rating file (user, item, value, timestamp per line)")
    parser.add_argument("--delimiter", choices=sorted(DELIMITERS), default="tab")
    parser.add_argument("--min-user-ratings", type=int, default=0, help="drop users with fewer ratings")
    parser.add_argument("--min-item-ratings", type=int, default=0, help="drop items with fewer ratings")
    parser.add_argument("--delta", type=int, default=86400, help="time-gap threshold in seconds")
    parser.add_argument("--split", choices=list(STRATEGIES), default="timestamp")
    parser.add_argument("--test-ratio", type=float, default=0.2)
    parser.add_argument("--k", type=int, default=5, help="length of each generated sequence")
    parser.add_argument(
        "--recommenders",
        default=",".join(KINDS),
        help=f"comma-separated subset of {','.join(KINDS)}",
    )
    parser.add_argument("--alpha", type=float, default=0.1, help="bigram additive smoothing")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--format", choices=list(OUTPUT_FORMATS), default="json")
    parser.add_argument("--output", default=None, help="write the report here instead of stdout")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    recommenders = tuple(part.strip() for part in args.recommenders.split(",") if part.strip())
    return ExperimentConfig(
        input_path=args.input,
        delimiter=args.delimiter,
        min_user_ratings=args.min_user_ratings,
        min_item_ratings=args.min_item_ratings,
        delta_seconds=args.delta,
        split_strategy=args.split,
        test_ratio=args.test_ratio,
        k=args.k,
        recommenders=recommenders,
        smoothing_alpha=args.alpha,
        seed=args.seed,
        output_format=args.format,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    try:
        result = run_experiment(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"data error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_DATA

    text = render(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
