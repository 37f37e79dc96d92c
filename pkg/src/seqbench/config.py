"""Experiment configuration: every knob of a run, with shared validation.

The CLI and the HTTP service both validate through this module so their
rules cannot drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Any

from .errors import ConfigError
from .ingest import DELIMITERS
from .recommenders import KINDS
from .splitting import STRATEGIES

OUTPUT_FORMATS = ("json", "csv", "markdown")
MAX_SEED = 2**64 - 1


@dataclass
class ExperimentConfig:
    input_path: str
    delimiter: str = "tab"
    min_user_ratings: int = 0
    min_item_ratings: int = 0
    delta_seconds: int = 86400
    split_strategy: str = "timestamp"
    test_ratio: float = 0.2
    k: int = 5
    recommenders: tuple[str, ...] = KINDS
    smoothing_alpha: float = 0.1
    seed: int = 42
    output_format: str = "json"

    def field_errors(self) -> list[dict[str, str]]:
        """Every invalid field with a human-readable message; empty when valid."""
        errors = []

        def bad(name: str, message: str):
            errors.append({"field": name, "message": message})

        if not isinstance(self.input_path, str) or not self.input_path:
            bad("input_path", "must be a non-empty path")
        if self.delimiter not in DELIMITERS:
            bad("delimiter", f"must be one of {sorted(DELIMITERS)}")
        if not _is_int(self.min_user_ratings) or self.min_user_ratings < 0:
            bad("min_user_ratings", "must be a non-negative integer")
        if not _is_int(self.min_item_ratings) or self.min_item_ratings < 0:
            bad("min_item_ratings", "must be a non-negative integer")
        if not _is_int(self.delta_seconds) or self.delta_seconds < 1:
            bad("delta_seconds", "must be a positive integer number of seconds")
        if self.split_strategy not in STRATEGIES:
            bad("split_strategy", f"must be one of {list(STRATEGIES)}")
        if not isinstance(self.test_ratio, (int, float)) or not 0.0 < self.test_ratio < 1.0:
            bad("test_ratio", "must be strictly between 0 and 1")
        if not _is_int(self.k) or self.k < 1:
            bad("k", "must be a positive integer")
        if (
            not isinstance(self.recommenders, (list, tuple))
            or not self.recommenders
            or any(kind not in KINDS for kind in self.recommenders)
            or len(set(self.recommenders)) != len(self.recommenders)
        ):
            bad("recommenders", f"must be a non-empty list of distinct kinds from {list(KINDS)}")
        if not isinstance(self.smoothing_alpha, (int, float)) or self.smoothing_alpha < 0:
            bad("smoothing_alpha", "must be a non-negative number")
        if not _is_int(self.seed) or not 0 <= self.seed <= MAX_SEED:
            bad("seed", "must be an unsigned 64-bit integer")
        if self.output_format not in OUTPUT_FORMATS:
            bad("output_format", f"must be one of {list(OUTPUT_FORMATS)}")
        return errors

    def validate(self) -> None:
        errors = self.field_errors()
        if errors:
            details = "; ".join(f"{e['field']}: {e['message']}" for e in errors)
            raise ConfigError(details)

    def to_dict(self) -> dict[str, Any]:
        """Stable-order echo of every field."""
        return {
            "input_path": self.input_path,
            "delimiter": self.delimiter,
            "min_user_ratings": self.min_user_ratings,
            "min_item_ratings": self.min_item_ratings,
            "delta_seconds": self.delta_seconds,
            "split_strategy": self.split_strategy,
            "test_ratio": self.test_ratio,
            "k": self.k,
            "recommenders": list(self.recommenders),
            "smoothing_alpha": self.smoothing_alpha,
            "seed": self.seed,
            "output_format": self.output_format,
        }


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def config_from_dict(payload: Any) -> tuple[ExperimentConfig | None, list[dict[str, str]]]:
    """Build a config from a JSON-shaped dict, collecting every field error.

    Returns (config, []) on success or (None, errors) where each error
    names the offending field. Unknown keys and type mismatches are
    reported alongside range violations so a caller sees everything wrong
    at once.
    """
    if not isinstance(payload, dict):
        return None, [{"field": "", "message": "request body must be a JSON object"}]

    known = {f.name for f in fields(ExperimentConfig)}
    errors = [
        {"field": key, "message": "unknown field"}
        for key in sorted(set(payload) - known)
    ]

    kwargs = {key: value for key, value in payload.items() if key in known}
    kwargs.setdefault("input_path", "")  # flagged as invalid below when missing
    if isinstance(kwargs.get("recommenders"), list):
        kwargs["recommenders"] = tuple(kwargs["recommenders"])
    config = ExperimentConfig(**kwargs)
    errors.extend(config.field_errors())
    if errors:
        return None, errors
    return config, []
