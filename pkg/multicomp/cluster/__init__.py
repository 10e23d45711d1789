"""Cluster expansion of g-exclusion statistics over g-compositions"""

from .exclusion import (
    GComposition,
    anchor_monomial,
    closed_form_cg,
    cluster_coefficients,
    decompose_b,
    enumerate_g_compositions,
    identity_sum,
    k_for_g,
    observed_sign,
    partition_function,
    term_for_composition,
)
from .state_polynomial import StatePolynomial, make_monomial, render_monomial

__all__ = [
    "GComposition",
    "StatePolynomial",
    "anchor_monomial",
    "closed_form_cg",
    "cluster_coefficients",
    "decompose_b",
    "enumerate_g_compositions",
    "identity_sum",
    "k_for_g",
    "make_monomial",
    "observed_sign",
    "partition_function",
    "render_monomial",
    "term_for_composition",
]
