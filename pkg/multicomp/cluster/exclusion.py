#!/usr/bin/env python3
"""
Cluster expansion for g-exclusion statistics on q one-body states

Z(n) is built as a StatePolynomial, b(n) comes from the formal logarithm of
sum_n Z(n) z^n, and b(n) is split over g-compositions of n.
Uses the g indexing throughout; k_for_g is the only place it meets k.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Tuple

from joblib import Parallel, delayed

from ..core.bijections import to_zero_form
from ..core.compositions import check_n
from ..core.enumeration import enumerate_compositions
from ..errors import CompositionSemanticError, DomainError, ResidualError
from ..series.power_series import log_recurrence
from .state_polynomial import Monomial, StatePolynomial, make_monomial

logger = logging.getLogger('multicomp.cluster')


def check_g(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise DomainError(f"g must be an integer >= 2, got {g!r}")


def k_for_g(g: int) -> int:
    """Color count of the multicompositions matching g-exclusion: k = g - 1"""
    check_g(g)
    return g - 1


@dataclass(frozen=True)
class GComposition:
    """Composition with internal zeros, zero runs at most g - 2 long"""
    g: int
    parts: Tuple[int, ...]

    def __post_init__(self):
        check_g(self.g)
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise CompositionSemanticError("a g-composition needs at least one part")
        if any(part < 0 for part in parts):
            raise CompositionSemanticError("parts must be nonnegative")
        if parts[0] == 0 or parts[-1] == 0:
            raise CompositionSemanticError("the first and last parts must be positive")
        run = 0
        for part in parts:
            run = run + 1 if part == 0 else 0
            if run > self.g - 2:
                raise CompositionSemanticError(
                    f"zero run of length {run} exceeds g-2 = {self.g - 2}"
                )

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def render(self) -> str:
        return "+".join(str(part) for part in self.parts)


def enumerate_g_compositions(g: int, n: int) -> List[GComposition]:
    """g-compositions of n, in the multicomposition enumeration order for k = g - 1"""
    k = k_for_g(g)
    return [
        GComposition(g, to_zero_form(c).terms) for c in enumerate_compositions(k, n)
    ]


def _branch(g: int, n: int, q: int, largest: int) -> List[Monomial]:
    """Monomials of Z(n) whose first summation index k_1 equals largest"""
    top_state = largest + g * (n - 1)
    monomials = []
    for rest in itertools.combinations_with_replacement(range(1, largest + 1), n - 1):
        states = [value + g * index for index, value in enumerate(rest)]
        states.append(top_state)
        monomials.append(tuple((state, 1) for state in states))
    return monomials


def partition_function(g: int, n: int, q: int, jobs: int = 1) -> StatePolynomial:
    """Z(n) = sum over q-g(n-1) >= k_1 >= ... >= k_n >= 1 of prod_j s(k_j + g(n-j))

    Z(0) is the constant 1; the sum is empty when q < g(n-1) + 1. With
    jobs > 1 the k_1 branches run on a joblib thread pool and are merged
    in branch order.
    """
    check_g(g)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return StatePolynomial.one(q)
    limit = q - g * (n - 1)
    if limit < 1:
        return StatePolynomial.zero(q)
    branches = Parallel(n_jobs=jobs, prefer="threads")(
        delayed(_branch)(g, n, q, largest) for largest in range(1, limit + 1)
    )
    terms = {monomial: 1 for branch in branches for monomial in branch}
    return StatePolynomial(q, terms)


def cluster_coefficients(g: int, N: int, q: int, jobs: int = 1) -> List[StatePolynomial]:
    """b(1), ..., b(N) from log(sum_n Z(n) z^n), exact"""
    check_g(g)
    check_n(N)
    z_series = [partition_function(g, n, q, jobs) for n in range(N + 1)]
    logger.debug(f"Built Z(0..{N}) for g={g}, q={q}: sizes {[len(z) for z in z_series]}")
    return log_recurrence(z_series)


def _offset_exponents(parts: Tuple[int, ...], start: int) -> Dict[int, int]:
    j = len(parts)
    return {start + j - i: part for i, part in enumerate(parts, start=1) if part}


def term_for_composition(composition: GComposition, q: int) -> StatePolynomial:
    """sum_{k=1}^{q} prod_i s(k + j - i)^(l_i), dropping summands that need a state > q"""
    j = len(composition.parts)
    terms = {
        make_monomial(_offset_exponents(composition.parts, start)): 1
        for start in range(1, q - j + 2)
    }
    return StatePolynomial(q, terms)


def anchor_monomial(composition: GComposition) -> Monomial:
    """The k = 1 summand of term_for_composition; distinct compositions give distinct anchors"""
    return make_monomial(_offset_exponents(composition.parts, 1))


def decompose_b(g: int, n: int, q: int, jobs: int = 1) -> Dict[GComposition, Fraction]:
    """Write b(n) as a combination of term_for_composition over the g-compositions of n

    Raises ResidualError when the combination does not reproduce b(n) exactly.
    """
    check_g(g)
    check_n(n)
    if q < g * n:
        raise DomainError(f"decomposition needs q >= g*n = {g * n}, got q={q}")
    b = cluster_coefficients(g, n, q, jobs)[n - 1]
    decomposition: Dict[GComposition, Fraction] = {}
    residual = b
    for composition in enumerate_g_compositions(g, n):
        coefficient = b.coefficient(anchor_monomial(composition))
        decomposition[composition] = coefficient
        residual = residual - coefficient * term_for_composition(composition, q)
    if not residual.is_zero():
        raise ResidualError(
            f"b({n}) for g={g}, q={q} left residual {residual.render()}"
        )
    logger.info(f"Decomposed b({n}) for g={g} over {len(decomposition)} compositions")
    return decomposition


def observed_sign(coefficients: Iterable[Fraction]) -> int:
    """Common sign of the coefficients: 1, -1, or 0 when they disagree or are all zero"""
    signs = {(value > 0) - (value < 0) for value in coefficients}
    if len(signs) == 1:
        return signs.pop()
    return 0


def closed_form_cg(g: int, composition: GComposition) -> Fraction:
    """|c_g(l)| = (l_1+..+l_{g-1}-1)! / (l_1!..l_{g-1}!) * prod_i binomial(l_i+..+l_{i+g-1}-1, l_{i+g-1})

    Missing l_i in the leading factor count as 0 when the composition is
    shorter than g - 1.
    """
    check_g(g)
    parts = composition.parts
    j = len(parts)
    head = list(parts[: g - 1]) + [0] * max(0, g - 1 - j)
    value = Fraction(factorial(sum(head) - 1))
    for part in head:
        value /= factorial(part)
    for i in range(j - g + 1):
        window = parts[i:i + g]
        value *= comb(sum(window) - 1, window[-1])
    return value


def identity_sum(g: int, n: int) -> Tuple[Fraction, Fraction]:
    """(sum of closed_form_cg over the g-compositions of n, binomial(gn, n) / (gn))"""
    check_g(g)
    check_n(n)
    lhs = sum((closed_form_cg(g, c) for c in enumerate_g_compositions(g, n)), Fraction(0))
    rhs = Fraction(comb(g * n, n), g * n)
    return lhs, rhs
