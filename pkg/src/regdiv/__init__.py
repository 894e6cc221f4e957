"""Divisor-counting sequence toolkit.

A library and CLI around the integer sequence s(n) defined by residue
recursions on n mod 4, whose values count divisors: the value m occurs
exactly tau(m*m + 1) times.  Includes the underlying divisor-pair tree,
an elementary divisor oracle, and mechanical verification of the
identities the construction guarantees.
"""

from .analysis import (
    OccurrenceRecord,
    VerificationReport,
    fib,
    fib_path_check,
    fib_path_index,
    fib_square_factorization,
    gf_coefficients,
    indices_of,
    occurrences_brute,
    prime_criterion,
    row_average_closed_form,
    row_average_exact,
    row_max,
    row_max_zigzag,
    row_maxes,
    row_sum,
    row_sums,
    verify_theorem,
)
from .divisors import DivisorList, divisors, is_prime, tau, tau_m2p1
from .errors import (
    ConsistencyError,
    DivisorBudgetError,
    InvalidPairError,
    RegdivError,
    ResourceLimitError,
    RootHasNoParentError,
)
from .pairtree import (
    ROOT,
    Pair,
    apply_path,
    index_of_pair,
    index_to_word,
    involute,
    left_child,
    pair_at_index,
    pair_rows,
    parent,
    path_from_root,
    right_child,
    tree_as_dict,
    tree_as_dot,
    word_to_index,
)
from .sequence import (
    SequenceEvaluator,
    cantor,
    iter_rows,
    iter_values,
    row_of_index,
    row_values,
    s_eval,
    s_range,
    v2,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DivisorBudgetError",
    "DivisorList",
    "InvalidPairError",
    "OccurrenceRecord",
    "Pair",
    "ROOT",
    "RegdivError",
    "ResourceLimitError",
    "RootHasNoParentError",
    "SequenceEvaluator",
    "VerificationReport",
    "apply_path",
    "cantor",
    "divisors",
    "fib",
    "fib_path_check",
    "fib_path_index",
    "fib_square_factorization",
    "gf_coefficients",
    "index_of_pair",
    "index_to_word",
    "indices_of",
    "involute",
    "is_prime",
    "iter_rows",
    "iter_values",
    "left_child",
    "occurrences_brute",
    "pair_at_index",
    "pair_rows",
    "parent",
    "path_from_root",
    "prime_criterion",
    "right_child",
    "row_average_closed_form",
    "row_average_exact",
    "row_max",
    "row_max_zigzag",
    "row_maxes",
    "row_of_index",
    "row_sum",
    "row_sums",
    "row_values",
    "s_eval",
    "s_range",
    "tau",
    "tau_m2p1",
    "tree_as_dict",
    "tree_as_dot",
    "v2",
    "verify_theorem",
    "word_to_index",
]
