"""Exception hierarchy for the evaluation pipeline.

ConfigError maps to CLI exit code 2, DataError subclasses to exit code 3.
"""


class SeqbenchError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(SeqbenchError):
    """An experiment configuration failed validation."""


class DataError(SeqbenchError):
    """Base class for errors raised while preparing or scoring data."""


class MalformedLine(DataError):
    """A rating-file line could not be parsed."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class EmptyInput(DataError):
    """The rating source contained no ratings."""


class EmptyAfterFilter(DataError):
    """No ratings survived the support filters."""


class NoSequences(DataError):
    """Every candidate sequence was shorter than two steps."""


class DegenerateSplit(DataError):
    """The requested split would leave the training or test set empty."""


class UnknownItem(DataError):
    """A seed item is outside the training catalog and fallback is disabled."""


class NoTransitions(DataError):
    """The test set holds no consecutive item transitions."""


class ZeroVector(SeqbenchError):
    """Cosine similarity is undefined for a zero vector."""


class NoConvergence(SeqbenchError):
    """Power iteration did not reach the stationary distribution."""
