"""Multinomial coefficients and counts of k-compositions by parts"""

from .multinomial import (
    count_all_parts,
    count_positive_parts,
    count_total,
    count_zeros,
    multinomial,
    multinomial_row,
)
from .triangles import Statistic, Triangle, as_statistic, construct_by_recurrence, triangle

__all__ = [
    "Statistic",
    "Triangle",
    "as_statistic",
    "construct_by_recurrence",
    "count_all_parts",
    "count_positive_parts",
    "count_total",
    "count_zeros",
    "multinomial",
    "multinomial_row",
    "triangle",
]
