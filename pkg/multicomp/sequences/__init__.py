"""k-Jacobsthal and k-Pell sequences, B compositions and the diagonal-sum bijections"""

from .bcompositions import ONE, ONE_PRIME, BComposition, BPart, b_symbols, enumerate_B
from .recurrences import jacobsthal_k, jacobsthal_printed_formula, pell_k, pell_printed_formula
from .theorems import (
    diagonal_sum,
    theorem1_inverse,
    theorem1_map,
    theorem2_inverse,
    theorem2_map,
)

__all__ = [
    "ONE",
    "ONE_PRIME",
    "BComposition",
    "BPart",
    "b_symbols",
    "diagonal_sum",
    "enumerate_B",
    "jacobsthal_k",
    "jacobsthal_printed_formula",
    "pell_k",
    "pell_printed_formula",
    "theorem1_inverse",
    "theorem1_map",
    "theorem2_inverse",
    "theorem2_map",
]
