#!/usr/bin/env python3
"""
Diagonal sums of the positive-part and zero-count triangles
The two bijections behind them, as explicit maps
"""

import logging
from typing import Union

from ..core.bijections import from_markers, to_colored_form, to_markers, to_zero_form
from ..core.compositions import (
    JOIN,
    ColoredComposition,
    MarkerSequence,
    Part,
    ZeroComposition,
    check_k,
    check_n,
)
from ..counting.multinomial import count_positive_parts, count_zeros
from ..counting.triangles import Statistic, as_statistic
from ..errors import DomainError
from .bcompositions import ONE_PRIME, BComposition, BPart

logger = logging.getLogger('multicomp.sequences')


def theorem1_map(c: ColoredComposition) -> ColoredComposition:
    """Increase every part by 1: C_+(n+1-i, i) -> compositions of n+1 with no part 1"""
    return ColoredComposition.trusted(
        c.k, tuple(Part(value + 1, color) for value, color in c.parts)
    )


def theorem1_inverse(c: ColoredComposition) -> ColoredComposition:
    """Decrease every part by 1; the input may not contain a part equal to 1"""
    if any(value == 1 for value, _ in c.parts):
        raise DomainError("the inverse map needs a composition with no part equal to 1")
    return ColoredComposition.trusted(
        c.k, tuple(Part(value - 1, color) for value, color in c.parts)
    )


def theorem2_map(c: Union[ColoredComposition, ZeroComposition]) -> BComposition:
    """Read c on the marker board and write J as 1' and S_m as m"""
    if isinstance(c, ZeroComposition):
        c = to_colored_form(c)
    if c.k < 2:
        raise DomainError(f"the marker-to-B map needs k >= 2, got {c.k}")
    board = to_markers(c)
    if not board.markers:
        raise DomainError("the composition 1 maps to the empty B composition, which is excluded")
    return BComposition(
        c.k, tuple(ONE_PRIME if marker == JOIN else BPart(marker) for marker in board.markers)
    )


def theorem2_inverse(b: BComposition) -> ZeroComposition:
    """Write 1' as J and m as S_m, then read the board as an internal-zeros composition"""
    markers = tuple(JOIN if part.primed else part.value for part in b.parts)
    board = MarkerSequence.trusted(b.k, len(markers) + 1, markers)
    return to_zero_form(from_markers(board))


def diagonal_sum(k: int, statistic: Union[Statistic, str], n: int) -> int:
    """Anti-diagonal sum of the positive-part or zero-count triangle

    positive_parts: sum_{i>=1} c_+(n+1-i, i), equal to the k-Jacobsthal J(n)
    zeros:          sum_{i>=0} c_0(n-i, i),   equal to the k-Pell P(n)
    """
    check_k(k)
    check_n(n)
    statistic = as_statistic(statistic)
    if statistic is Statistic.POSITIVE_PARTS:
        return sum(count_positive_parts(k, n + 1 - i, i) for i in range(1, n + 1))
    if statistic is Statistic.ZEROS:
        if k < 2:
            raise DomainError(f"the zero-count diagonal needs k >= 2, got {k}")
        return sum(count_zeros(k, n - i, i) for i in range(n))
    raise DomainError("diagonal sums are defined for positive_parts and zeros only")
