#!/usr/bin/env python3
"""
Counting triangles built from the part-count recurrences
Row n partitions the k-compositions of n by a part statistic
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

from ..core.compositions import ZeroComposition, check_k, check_n
from ..errors import DomainError

logger = logging.getLogger('multicomp.counting')


class Statistic(str, Enum):
    ALL_PARTS = "all_parts"
    POSITIVE_PARTS = "positive_parts"
    ZEROS = "zeros"

    @property
    def first_index(self) -> int:
        """Smallest l of a row: every composition has a part, not every one a zero"""
        return 0 if self is Statistic.ZEROS else 1

    def measure(self, z: ZeroComposition) -> int:
        """Value of the statistic on one composition"""
        if self is Statistic.ALL_PARTS:
            return z.length
        if self is Statistic.POSITIVE_PARTS:
            return z.length - z.zero_count
        return z.zero_count

    def row_length(self, k: int, n: int) -> int:
        if self is Statistic.ALL_PARTS:
            return n * k - k + 1
        if self is Statistic.POSITIVE_PARTS:
            return n
        return (n - 1) * (k - 1) + 1


def as_statistic(statistic: Union[Statistic, str]) -> Statistic:
    try:
        return Statistic(statistic)
    except ValueError:
        known = ", ".join(s.value for s in Statistic)
        raise DomainError(f"unknown statistic {statistic!r} (expected one of {known})") from None


@dataclass(frozen=True)
class Triangle:
    """Exact counts c(n, l) for n = 1..len(rows); row n starts at l = statistic.first_index"""
    k: int
    statistic: Statistic
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def first_index(self) -> int:
        return self.statistic.first_index

    def row(self, n: int) -> Tuple[int, ...]:
        return self.rows[n - 1]

    def entry(self, n: int, l: int) -> int:
        """c(n, l), zero outside the stored range"""
        if not 1 <= n <= len(self.rows):
            return 0
        index = l - self.first_index
        row = self.rows[n - 1]
        return row[index] if 0 <= index < len(row) else 0

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self.rows]

    def diagonal(self, n: int) -> int:
        """Anti-diagonal sum c(n, l0) + c(n-1, l0+1) + c(n-2, l0+2) + ..."""
        return sum(self.entry(n - i, self.first_index + i) for i in range(n))


def _next_row(previous: Tuple[int, ...], k: int, statistic: Statistic, n: int) -> Tuple[int, ...]:
    """Row n from row n-1 using only the recurrence for the statistic"""
    first = statistic.first_index

    def prev(l: int) -> int:
        index = l - first
        return previous[index] if 0 <= index < len(previous) else 0

    length = statistic.row_length(k, n)
    row = []
    for l in range(first, first + length):
        if statistic is Statistic.ALL_PARTS:
            # c(n,l) = c(n-1,l-k) + ... + c(n-1,l-1) + c(n-1,l)
            value = sum(prev(l - j) for j in range(k + 1))
        elif statistic is Statistic.POSITIVE_PARTS:
            # c+(n,l) = k c+(n-1,l-1) + c+(n-1,l)
            value = k * prev(l - 1) + prev(l)
        else:
            # c0(n,l) = c0(n-1,l-k+1) + ... + c0(n-1,l-1) + 2 c0(n-1,l)
            value = sum(prev(l - j) for j in range(1, k)) + 2 * prev(l)
        row.append(value)
    return tuple(row)


def triangle(k: int, statistic: Union[Statistic, str], rows: int) -> Triangle:
    """Build rows 1..rows of the counting triangle from the recurrence alone"""
    check_k(k)
    check_n(rows)
    statistic = as_statistic(statistic)
    built = [(1,)]
    for n in range(2, rows + 1):
        built.append(_next_row(built[-1], k, statistic, n))
    logger.debug(f"Built {statistic.value} triangle for k={k} with {rows} rows")
    return Triangle(k, statistic, tuple(built))


def _append(z: ZeroComposition, zeros_before_one: int) -> ZeroComposition:
    return ZeroComposition.trusted(z.k, z.terms + (0,) * zeros_before_one + (1,))


def _grow_last(z: ZeroComposition) -> ZeroComposition:
    return ZeroComposition.trusted(z.k, z.terms[:-1] + (z.terms[-1] + 1,))


def construct_by_recurrence(
    k: int, n: int, statistic: Union[Statistic, str]
) -> Dict[int, List[ZeroComposition]]:
    """Build the sets C(n, l) from C(n-1, .) by the append / grow-last-part constructions

    Lists are returned (not sets) so a non-injective construction would show
    up as a duplicate.
    """
    check_k(k)
    check_n(n)
    statistic = as_statistic(statistic)
    level: Dict[int, List[ZeroComposition]] = {
        statistic.first_index: [ZeroComposition.trusted(k, (1,))]
    }
    for _ in range(2, n + 1):
        grown: Dict[int, List[ZeroComposition]] = {}
        for l, members in level.items():
            for z in members:
                grown.setdefault(l, []).append(_grow_last(z))
                if statistic is Statistic.ALL_PARTS:
                    # j terms appended: j-1 zeros and a 1
                    for j in range(1, k + 1):
                        grown.setdefault(l + j, []).append(_append(z, j - 1))
                elif statistic is Statistic.POSITIVE_PARTS:
                    # a new part 1_c for each color c
                    for c in range(1, k + 1):
                        grown.setdefault(l + 1, []).append(_append(z, c - 1))
                else:
                    # a bare 1, or j zeros then a 1
                    grown[l].append(_append(z, 0))
                    for j in range(1, k):
                        grown.setdefault(l + j, []).append(_append(z, j))
        level = grown
    return level
