"""Exact normal forms and truncated-operator norms for Thompson's group F."""

from .conjugate import ConjCaseTag, ConjResult, audit, collision_pairs, conjugate_nf, prop31_nf
from .experiment import ExperimentConfig, Report, run_experiment
from .errors import (
    BudgetExceeded, EqualInputs, InvalidShape, IterationLimitExceeded, NotForbidden,
    NotInF2, ThompsonError, WordSyntaxError,
)
from .partition import ClassId, classify
from .plmaps import DyadicPL, compose, generator_map, invert_map, maps_equal, word_to_map
from .rewrite import F2Shape, Occurrence, f2_shape, find_forbidden, is_normal, normalize, rewrite_occurrence
from .spectral import Sector, apply_conjugated_generator, build_operator, enumerate_ball, operator_norm
from .words import X0, X1, Gen, Word, concat, format_word, free_reduce, invert, parse_word

__version__ = "0.1.0"

__all__ = [
    "ConjCaseTag", "ConjResult", "audit", "collision_pairs", "conjugate_nf", "prop31_nf",
    "ExperimentConfig", "Report", "run_experiment",
    "BudgetExceeded", "EqualInputs", "InvalidShape", "IterationLimitExceeded", "NotForbidden",
    "NotInF2", "ThompsonError", "WordSyntaxError",
    "ClassId", "classify",
    "DyadicPL", "compose", "generator_map", "invert_map", "maps_equal", "word_to_map",
    "F2Shape", "Occurrence", "f2_shape", "find_forbidden", "is_normal", "normalize",
    "rewrite_occurrence",
    "Sector", "apply_conjugated_generator", "build_operator", "enumerate_ball", "operator_norm",
    "X0", "X1", "Gen", "Word", "concat", "format_word", "free_reduce", "invert", "parse_word",
]
