"""Offline evaluation toolkit for sequence-based recommender systems."""

from .config import ExperimentConfig
from .errors import (
    ConfigError,
    DataError,
    DegenerateSplit,
    EmptyAfterFilter,
    EmptyInput,
    MalformedLine,
    NoConvergence,
    NoSequences,
    NoTransitions,
    SeqbenchError,
    UnknownItem,
    ZeroVector,
)
from .evaluation import EvaluationReport, GeneratedSequence, evaluate, generate
from .experiment import ExperimentResult, run_experiment
from .ingest import Rating, RatingLog, apply_support_filters, parse_ratings, serialize_ratings
from .profiling import Profile, profile
from .recommenders import KINDS, Distribution, RecommenderModel, fit
from .sequences import Sequence, SequenceSet, build_sequences, make_sequence_set
from .similarity import ItemVector, build_item_vectors, cosine
from .splitting import Split, split
from .synthetic import GapPattern, PlantedChain, make_chain, sample_log, stationary_and_entropy

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DataError",
    "DegenerateSplit",
    "Distribution",
    "EmptyAfterFilter",
    "EmptyInput",
    "EvaluationReport",
    "ExperimentConfig",
    "ExperimentResult",
    "GapPattern",
    "GeneratedSequence",
    "ItemVector",
    "KINDS",
    "MalformedLine",
    "NoConvergence",
    "NoSequences",
    "NoTransitions",
    "PlantedChain",
    "Profile",
    "Rating",
    "RatingLog",
    "RecommenderModel",
    "SeqbenchError",
    "Sequence",
    "SequenceSet",
    "Split",
    "UnknownItem",
    "ZeroVector",
    "apply_support_filters",
    "build_item_vectors",
    "build_sequences",
    "cosine",
    "evaluate",
    "fit",
    "generate",
    "make_chain",
    "make_sequence_set",
    "parse_ratings",
    "profile",
    "run_experiment",
    "sample_log",
    "serialize_ratings",
    "split",
    "stationary_and_entropy",
]
