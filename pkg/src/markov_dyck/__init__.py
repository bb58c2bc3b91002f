"""Markov-Dyck shifts, their Cantor horizon lambda-graph systems and K-groups."""

from .dyck import (
    DyckSymbol,
    ReducedForm,
    alpha,
    beta,
    enumerate_admissible,
    is_admissible,
    oracle_is_admissible,
    parse_word,
    reduce,
)
from .intmat import (
    AbelianGroupPresentation,
    cokernel,
    hermite_normal_form,
    kernel,
    smith_normal_form,
)
from .ktheory import KTheoryReport, k0_tower, k1_tower, ktheory_report, limit_profile
from .lambda_graph import LambdaGraphSystem, SymbolicMatrix, build_cantor_horizon
from .markov import (
    TransitionMatrix,
    admissible_words,
    count_words,
    entropy,
    perron_eigenvalue,
    resolve_matrix,
    word_index,
)

__all__ = [
    "AbelianGroupPresentation",
    "DyckSymbol",
    "KTheoryReport",
    "LambdaGraphSystem",
    "ReducedForm",
    "SymbolicMatrix",
    "TransitionMatrix",
    "admissible_words",
    "alpha",
    "beta",
    "build_cantor_horizon",
    "cokernel",
    "count_words",
    "enumerate_admissible",
    "hermite_normal_form",
    "is_admissible",
    "k0_tower",
    "k1_tower",
    "kernel",
    "ktheory_report",
    "limit_profile",
    "oracle_is_admissible",
    "parse_word",
    "entropy",
    "perron_eigenvalue",
    "reduce",
    "resolve_matrix",
    "smith_normal_form",
    "word_index",
]
