#!/usr/bin/env python3
"""
Generating functions of multicomposition counts
Closed rational forms, and the unsimplified first-part / later-parts form
"""

import logging
from enum import Enum
from typing import Callable, Union

from ..core.compositions import check_k
from ..errors import DomainError, SeriesError
from .power_series import PowerSeries, expand_rational

logger = logging.getLogger('multicomp.series')


class Family(str, Enum):
    TOTAL = "total"
    ONE_TWO = "one_two"
    ODD = "odd"
    NO_ONES = "no_ones"
    JACOBSTHAL = "jacobsthal"
    PELL = "pell"


def as_family(family: Union[Family, str]) -> Family:
    try:
        return Family(family)
    except ValueError:
        known = ", ".join(item.value for item in Family)
        raise DomainError(f"unknown family {family!r} (expected one of {known})") from None


def allowed_parts_series(admits: Callable[[int], bool], order: int) -> PowerSeries:
    """F(x) = sum of x^i over the allowed part sizes i >= 1"""
    return PowerSeries.of([0] + [1 if admits(i) else 0 for i in range(1, order)], order)


def gf_from_parts(parts: PowerSeries, k: int, order: int) -> PowerSeries:
    """F / (1 - kF): first part color 1, every later part any of k colors"""
    check_k(k)
    parts = parts.truncate(order)
    if parts[0] != 0:
        raise SeriesError("the part series must have zero constant term")
    return parts / (1 - k * parts)


def total_series_unsimplified(k: int, order: int) -> PowerSeries:
    """sum_{i>=1} x^i / (1 - k sum_{i>=1} x^i) from truncated geometric polynomials"""
    geometric = [0] + [1] * (order - 1)
    return expand_rational(geometric, [1] + [-k] * (order - 1), order)


def total_series(k: int, order: int) -> PowerSeries:
    """x / (1 - (k+1)x)"""
    return expand_rational([0, 1], [1, -(k + 1)], order)


def _closed_form(family: Family, k: int):
    """(numerator, denominator) integer coefficient lists"""
    if family is Family.ONE_TWO:
        return [0, 1, 1], [1, -k, -k]
    if family is Family.ODD:
        return [0, 1], [1, -k, -1]
    if family is Family.NO_ONES:
        return [0, 0, 1], [1, -1, -k]
    if family is Family.JACOBSTHAL:
        return [0, 1], [1, -1, -k]
    if k < 2:
        raise DomainError(f"the k-Pell family needs k >= 2, got {k}")
    return [0, 1], [1, -2] + [-1] * (k - 1)


def gf_coefficients(family: Union[Family, str], k: int, order: int) -> PowerSeries:
    """Expand the named generating function to order

    For the total family both the unsimplified and the closed form are
    expanded and must agree.
    """
    check_k(k)
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    family = as_family(family)
    if family is Family.TOTAL:
        closed = total_series(k, order)
        unsimplified = total_series_unsimplified(k, order)
        if closed != unsimplified:
            raise SeriesError(f"total generating function forms disagree for k={k} to order {order}")
        logger.debug(f"Total generating function forms agree for k={k} to order {order}")
        return closed
    numerator, denominator = _closed_form(family, k)
    return expand_rational(numerator, denominator, order)
