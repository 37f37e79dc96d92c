"""Report rendering with byte-stable number formatting.

Every fractional number is emitted with exactly six decimal places
(round-half-even), in JSON, CSV and markdown alike, so identical runs
produce identical bytes and golden files stay comparable. The JSON
emitter is hand-rolled for one reason: the stdlib encoder cannot render
floats in fixed-point form.
"""

from __future__ import annotations

from .evaluation import METRIC_NAMES
from .experiment import ExperimentResult
from .profiling import Profile


class FixedNum:
    """A number whose JSON rendering is a fixed six-decimal literal."""

    __slots__ = ("text",)

    def __init__(self, value: float):
        self.text = format_number(value)


def format_number(value: float) -> str:
    return f"{value:.6f}"


def _json_write(value, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, FixedNum):
        out.append(value.text)
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif value is None:
        out.append("null")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append('"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for position, (key, item) in enumerate(value.items()):
            out.append(f'{pad}  "{key}": ')
            _json_write(item, indent + 1, out)
            out.append(",\n" if position < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for position, item in enumerate(value):
            out.append(pad + "  ")
            _json_write(item, indent + 1, out)
            out.append(",\n" if position < len(value) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"unrenderable value of type {type(value).__name__}; floats must be wrapped in FixedNum")


def dumps(document) -> str:
    """Serialize a document whose floats are FixedNum wrappers."""
    out: list[str] = []
    _json_write(document, 0, out)
    return "".join(out)


def config_echo(config_dict: dict) -> dict:
    """Config echo with fractional fields in fixed six-decimal form."""
    echo = dict(config_dict)
    echo["test_ratio"] = FixedNum(echo["test_ratio"])
    echo["smoothing_alpha"] = FixedNum(echo["smoothing_alpha"])
    return echo


def profile_document(prof: Profile) -> dict:
    return {
        "num_users": prof.num_users,
        "num_items": prof.num_items,
        "num_ratings": prof.num_ratings,
        "num_sequences": prof.num_sequences,
        "avg_sequence_length": FixedNum(prof.avg_sequence_length),
        "sparsity": FixedNum(prof.sparsity),
    }


def result_document(result: ExperimentResult) -> dict:
    """The single-document shape emitted by the CLI in JSON mode."""
    return {
        "config": config_echo(result.config.to_dict()),
        "profile": profile_document(result.profile),
        "reports": [
            {
                "recommender": kind,
                "metrics": {
                    name: FixedNum(value) for name, value in report.metrics().items()
                },
            }
            for kind, report in result.reports
        ],
    }


def render_json(result: ExperimentResult) -> str:
    return dumps(result_document(result)) + "\n"


def render_csv(result: ExperimentResult) -> str:
    header = "recommender," + ",".join(METRIC_NAMES)
    rows = [header]
    for kind, report in result.reports:
        metrics = report.metrics()
        rows.append(kind + "," + ",".join(format_number(metrics[name]) for name in METRIC_NAMES))
    return "\n".join(rows) + "\n"


def render_markdown(result: ExperimentResult) -> str:
    config = result.config
    prof = result.profile
    lines = [
        "# Evaluation report",
        "",
        f"- input: `{config.input_path}`",
        f"- split: {config.split_strategy} (test ratio {format_number(config.test_ratio)})",
        f"- sequence length k: {config.k}",
        f"- smoothing alpha: {format_number(config.smoothing_alpha)}",
        f"- seed: {config.seed}",
        "",
        "## Profile",
        "",
        "| users | items | ratings | sequences | avg length | sparsity |",
        "| --- | --- | --- | --- | --- | --- |",
        f"| {prof.num_users} | {prof.num_items} | {prof.num_ratings} | {prof.num_sequences} "
        f"| {format_number(prof.avg_sequence_length)} | {format_number(prof.sparsity)} |",
        "",
        "## Metrics",
        "",
        "| recommender | " + " | ".join(METRIC_NAMES) + " |",
        "| --- |" + " --- |" * len(METRIC_NAMES),
    ]
    for kind, report in result.reports:
        metrics = report.metrics()
        lines.append(
            f"| {kind} | " + " | ".join(format_number(metrics[name]) for name in METRIC_NAMES) + " |"
        )
    return "\n".join(lines) + "\n"


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "markdown": render_markdown,
}


def render(result: ExperimentResult) -> str:
    return RENDERERS[result.config.output_format](result)
