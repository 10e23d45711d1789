"""Restricted-part multicompositions"""

from .restricted import (
    Restriction,
    as_restriction,
    construct_restricted,
    count_restricted,
    enumerate_restricted,
    fibonacci,
)

__all__ = [
    "Restriction",
    "as_restriction",
    "construct_restricted",
    "count_restricted",
    "enumerate_restricted",
    "fibonacci",
]
