#!/usr/bin/env python3
"""
Restricted multicompositions
Positive parts in {1, 2}, positive parts odd, or no part equal to 1
"""

import logging
from enum import Enum
from typing import Dict, Iterator, List, Union

from ..core.compositions import ColoredComposition, Part, ZeroComposition, check_k, check_n, concatenate
from ..core.enumeration import enumerate_compositions
from ..errors import DomainError

logger = logging.getLogger('multicomp.restricted')


class Restriction(str, Enum):
    ONE_TWO = "one_two"
    ODD = "odd"
    NO_ONES = "no_ones"
    NONE = "none"

    def admits(self, value: int) -> bool:
        """Whether a positive part value is allowed; zeros are never restricted"""
        if self is Restriction.ONE_TWO:
            return value in (1, 2)
        if self is Restriction.ODD:
            return value % 2 == 1
        if self is Restriction.NO_ONES:
            return value != 1
        return True

    def satisfied_by(self, z: ZeroComposition) -> bool:
        return all(self.admits(term) for term in z.terms if term)


def as_restriction(r: Union[Restriction, str]) -> Restriction:
    try:
        return Restriction(r)
    except ValueError:
        known = ", ".join(item.value for item in Restriction)
        raise DomainError(f"unknown restriction {r!r} (expected one of {known})") from None


def fibonacci(n: int) -> int:
    """F(0) = 0, F(1) = 1"""
    if n < 0:
        raise DomainError(f"Fibonacci index must be nonnegative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _admitted(r: Restriction, c: ColoredComposition) -> bool:
    # positive terms of the zero form are exactly the colored part values
    return all(r.admits(value) for value, _ in c.parts)


def enumerate_restricted(k: int, n: int, r: Union[Restriction, str]) -> Iterator[ColoredComposition]:
    """Filter the core enumeration by the restriction; order is inherited"""
    r = as_restriction(r)
    stream = enumerate_compositions(k, n)
    if r is Restriction.NONE:
        return stream
    return (c for c in stream if _admitted(r, c))


def count_restricted(k: int, n: int, r: Union[Restriction, str]) -> int:
    """Count by the linear recurrence of the restriction, bottom-up"""
    check_k(k)
    check_n(n)
    r = as_restriction(r)
    if r is Restriction.NONE:
        return (k + 1) ** (n - 1)

    # initial values and c(n) = a c(n-1) + b c(n-2)
    if r is Restriction.ONE_TWO:
        values, a, b = [1, k + 1], k, k
    elif r is Restriction.ODD:
        values, a, b = [1, k], k, 1
    else:
        values, a, b = [0, 1, 1], 1, k

    if n <= len(values):
        return values[n - 1]
    previous, current = values[-2], values[-1]
    for _ in range(len(values) + 1, n + 1):
        previous, current = current, a * current + b * previous
    return current


def _with_part(c: ColoredComposition, value: int, color: int) -> ColoredComposition:
    return concatenate(c, ColoredComposition.trusted(c.k, (Part(value, 1),)), color)


def _extend_last(c: ColoredComposition, by: int) -> ColoredComposition:
    value, color = c.parts[-1]
    return ColoredComposition.trusted(c.k, c.parts[:-1] + (Part(value + by, color),))


def construct_restricted(k: int, n: int, r: Union[Restriction, str]) -> List[ColoredComposition]:
    """Build the restricted set from smaller ones by append / extend-last-part

    one_two: append 2_c to C(n-2), append 1_c to C(n-1)
    odd:     extend the last part of C(n-2) by 2, append 1_c to C(n-1)
    no_ones: append 2_c to C(n-2), extend the last part of C(n-1) by 1
    none:    append 1_c to C(n-1), extend the last part of C(n-1) by 1
    """
    check_k(k)
    check_n(n)
    r = as_restriction(r)
    colors = range(1, k + 1)

    def single(value: int) -> ColoredComposition:
        return ColoredComposition.trusted(k, (Part(value, 1),))

    if r is Restriction.ONE_TWO:
        sets: Dict[int, List[ColoredComposition]] = {
            1: [single(1)],
            2: [single(2)] + [_with_part(single(1), 1, c) for c in colors],
        }
    elif r is Restriction.ODD:
        sets = {1: [single(1)], 2: [_with_part(single(1), 1, c) for c in colors]}
    elif r is Restriction.NO_ONES:
        sets = {1: [], 2: [single(2)], 3: [single(3)]}
    else:
        sets = {1: [single(1)]}

    for m in range(max(sets) + 1, n + 1):
        if r is Restriction.ONE_TWO:
            built = [_with_part(x, 2, c) for x in sets[m - 2] for c in colors]
            built += [_with_part(x, 1, c) for x in sets[m - 1] for c in colors]
        elif r is Restriction.ODD:
            built = [_extend_last(x, 2) for x in sets[m - 2]]
            built += [_with_part(x, 1, c) for x in sets[m - 1] for c in colors]
        elif r is Restriction.NO_ONES:
            built = [_with_part(x, 2, c) for x in sets[m - 2] for c in colors]
            built += [_extend_last(x, 1) for x in sets[m - 1]]
        else:
            built = [_with_part(x, 1, c) for x in sets[m - 1] for c in colors]
            built += [_extend_last(x, 1) for x in sets[m - 1]]
        sets[m] = built
    logger.debug(f"Constructed {len(sets[n])} {r.value} compositions for k={k}, n={n}")
    return sets[n]
