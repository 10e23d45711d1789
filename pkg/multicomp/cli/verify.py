#!/usr/bin/env python3
"""
Verification suites: every closed form and recurrence against brute force

Each suite returns a SuiteOutcome of named checks; a failing check carries
the first counterexample found. Suites are independent and run on a joblib
pool when more than one worker is requested.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from joblib import Parallel, delayed

from ..cluster import (
    closed_form_cg,
    decompose_b,
    enumerate_g_compositions,
    identity_sum,
    observed_sign,
)
from ..core import (
    enumerate_compositions,
    enumerate_markers,
    from_markers,
    parse,
    partitioned_streams,
    render,
    to_colored_form,
    to_markers,
    to_zero_form,
    zero_count,
)
from ..core.grammar import form_of
from ..counting import (
    Statistic,
    construct_by_recurrence,
    count_all_parts,
    count_positive_parts,
    count_zeros,
    triangle,
)
from ..errors import MulticompError
from ..restricted import (
    Restriction,
    construct_restricted,
    count_restricted,
    enumerate_restricted,
    fibonacci,
)
from ..sequences import (
    diagonal_sum,
    enumerate_B,
    jacobsthal_k,
    jacobsthal_printed_formula,
    pell_k,
    pell_printed_formula,
    theorem1_inverse,
    theorem1_map,
    theorem2_inverse,
    theorem2_map,
)
from ..series import Family, allowed_parts_series, gf_coefficients, gf_from_parts, total_series

logger = logging.getLogger('multicomp.cli')

# Brute-force bounds that keep a default run fast
BIJECTION_MAX_N = 7
CLUSTER_ORACLE_MAX_N = 4
IDENTITY_MAX_N = 7
IDENTITY_MAX_G = 4

CLOSED_FORMS = {
    Statistic.ALL_PARTS: count_all_parts,
    Statistic.POSITIVE_PARTS: count_positive_parts,
    Statistic.ZEROS: count_zeros,
}

RESTRICTIONS = (Restriction.ONE_TWO, Restriction.ODD, Restriction.NO_ONES)

# k = 1 counts as Fibonacci numbers: c(n) = F(n + shift)
FIBONACCI_SHIFT = {Restriction.ONE_TWO: 1, Restriction.ODD: 0, Restriction.NO_ONES: -1}


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteOutcome:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    table: List[Dict[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


@dataclass(frozen=True)
class Bounds:
    max_n: int
    max_k: int
    cap: int  # largest (k+1)^(n-1) enumerated by brute force
    extra_states: int = 2


Check = Callable[[Bounds], Optional[str]]


def _run_check(suite: str, name: str, check: Check, bounds: Bounds) -> CheckResult:
    try:
        counterexample = check(bounds)
    except MulticompError as e:
        counterexample = f"raised {type(e).__name__}: {e}"
    except Exception as e:
        logger.exception(f"Check {suite}/{name} crashed")
        counterexample = f"crashed with {type(e).__name__}: {e}"
    if counterexample is None:
        return CheckResult(suite, name, True)
    logger.warning(f"Check {suite}/{name} failed: {counterexample}")
    return CheckResult(suite, name, False, counterexample)


def _grid(bounds: Bounds, min_k: int = 1, max_n: Optional[int] = None) -> Iterator[Tuple[int, int]]:
    """(k, n) pairs small enough to enumerate"""
    top = bounds.max_n if max_n is None else min(bounds.max_n, max_n)
    for k in range(min_k, max(bounds.max_k, min_k) + 1):
        for n in range(1, top + 1):
            if (k + 1) ** (n - 1) <= bounds.cap:
                yield k, n


# Core

def _check_counts(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        count = sum(1 for _ in enumerate_compositions(k, n))
        if count != (k + 1) ** (n - 1):
            return f"k={k}, n={n}: enumerated {count}, expected {(k + 1) ** (n - 1)}"
    return None


def _check_distinct_and_ordered(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        boards = [board.markers for board in enumerate_markers(k, n)]
        if boards != sorted(boards):
            return f"k={k}, n={n}: marker stream is not lexicographic"
        seen = {c.parts for c in enumerate_compositions(k, n)}
        if len(seen) != len(boards):
            return f"k={k}, n={n}: {len(boards) - len(seen)} duplicates"
    return None


def _check_bijections(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for c in enumerate_compositions(k, n):
            z = to_zero_form(c)
            if to_colored_form(z) != c:
                return f"zeros roundtrip fails on {render(c)}"
            if from_markers(to_markers(c)) != c:
                return f"marker roundtrip fails on {render(c)}"
            if z.zero_count != zero_count(c):
                return f"zero count of {render(z)} is {z.zero_count}, color excess {zero_count(c)}"
    return None


def _check_grammar(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for c in enumerate_compositions(k, n):
            for value in (c, to_zero_form(c), to_markers(c)):
                text = render(value)
                if parse(text, form_of(value), k) != value:
                    return f"parse(render(x)) differs for {text!r}"
    return None


def _check_partitioned(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        joined = [c for stream in partitioned_streams(k, n) for c in stream]
        if joined != list(enumerate_compositions(k, n)):
            return f"k={k}, n={n}: partitioned streams differ from the enumeration"
    return None


# Triangles

def _census(k: int, n: int, statistic: Statistic) -> Counter:
    return Counter(statistic.measure(to_zero_form(c)) for c in enumerate_compositions(k, n))


def _check_closed_forms(bounds: Bounds) -> Optional[str]:
    for k in range(1, bounds.max_k + 1):
        for statistic, closed_form in CLOSED_FORMS.items():
            built = triangle(k, statistic, bounds.max_n)
            for n in range(1, bounds.max_n + 1):
                for offset, value in enumerate(built.row(n)):
                    l = statistic.first_index + offset
                    if closed_form(k, n, l) != value:
                        return f"{statistic.value} k={k}: c({n},{l}) recurrence {value}, closed form {closed_form(k, n, l)}"
    return None


def _check_census(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for statistic in Statistic:
            census = _census(k, n, statistic)
            row = triangle(k, statistic, n).row(n)
            expected = {statistic.first_index + i: v for i, v in enumerate(row) if v}
            if dict(census) != expected:
                return f"{statistic.value} k={k}, n={n}: enumeration {dict(census)}, triangle {expected}"
    return None


def _check_row_sums(bounds: Bounds) -> Optional[str]:
    for k in range(1, bounds.max_k + 1):
        for statistic in Statistic:
            sums = triangle(k, statistic, bounds.max_n).row_sums()
            expected = [(k + 1) ** (n - 1) for n in range(1, bounds.max_n + 1)]
            if sums != expected:
                return f"{statistic.value} k={k}: row sums {sums}"
    return None


def _check_constructions(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for statistic in Statistic:
            built = construct_by_recurrence(k, n, statistic)
            grouped: Dict[int, set] = {}
            for c in enumerate_compositions(k, n):
                z = to_zero_form(c)
                grouped.setdefault(statistic.measure(z), set()).add(z.terms)
            for l, members in built.items():
                terms = [z.terms for z in members]
                if len(set(terms)) != len(terms) or set(terms) != grouped.get(l, set()):
                    return f"{statistic.value} k={k}: construction of C({n},{l}) differs"
            if set(grouped) - set(built):
                return f"{statistic.value} k={k}, n={n}: construction misses l={sorted(set(grouped) - set(built))}"
    return None


def _check_tribonacci(bounds: Bounds) -> Optional[str]:
    built = triangle(2, Statistic.ALL_PARTS, bounds.max_n)
    tribonacci = [1, 1, 2]
    while len(tribonacci) < bounds.max_n:
        tribonacci.append(sum(tribonacci[-3:]))
    diagonals = [built.diagonal(n) for n in range(1, bounds.max_n + 1)]
    if diagonals != tribonacci[: bounds.max_n]:
        return f"diagonals {diagonals}"
    return None


# Diagonals

def _check_jacobsthal(bounds: Bounds) -> Optional[str]:
    for k in range(1, bounds.max_k + 1):
        for n in range(1, bounds.max_n + 1):
            if diagonal_sum(k, Statistic.POSITIVE_PARTS, n) != jacobsthal_k(k, n):
                return f"k={k}, n={n}: diagonal {diagonal_sum(k, 'positive_parts', n)}, J={jacobsthal_k(k, n)}"
    return None


def _check_pell(bounds: Bounds) -> Optional[str]:
    for k in range(2, max(bounds.max_k, 2) + 1):
        for n in range(1, bounds.max_n + 1):
            if diagonal_sum(k, Statistic.ZEROS, n) != pell_k(k, n):
                return f"k={k}, n={n}: diagonal {diagonal_sum(k, 'zeros', n)}, P={pell_k(k, n)}"
    return None


def _check_part_shift_bijection(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds, max_n=BIJECTION_MAX_N):
        image = []
        for i in range(1, n + 1):
            for c in enumerate_compositions(k, n + 1 - i):
                if c.positive_count == i:
                    mapped = theorem1_map(c)
                    if theorem1_inverse(mapped) != c:
                        return f"inverse fails on {render(c)}"
                    image.append(mapped.parts)
        target = [c.parts for c in enumerate_restricted(k, n + 1, Restriction.NO_ONES)]
        if len(set(image)) != len(image) or set(image) != set(target):
            return f"k={k}, n={n}: image is not the set of compositions of {n + 1} without 1"
    return None


def _check_marker_bijection(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds, min_k=2, max_n=BIJECTION_MAX_N):
        if n < 2:
            continue
        # the zero-count diagonal: compositions of n - i with i zeros
        image = []
        for i in range(n - 1):
            for c in enumerate_compositions(k, n - i):
                if zero_count(c) != i:
                    continue
                b = theorem2_map(c)
                if theorem2_inverse(b) != to_zero_form(c):
                    return f"inverse fails on {render(c)}"
                image.append(b.parts)
        target = [b.parts for b in enumerate_B(k, n - 1)]
        if len(set(image)) != len(image) or set(image) != set(target):
            return f"k={k}, n={n}: image differs from the B compositions of {n - 1}"
    return None


def _printed_formula_notes(bounds: Bounds) -> List[str]:
    notes = []
    for k in range(1, bounds.max_k + 1):
        for n in range(1, bounds.max_n + 1):
            printed, actual = jacobsthal_printed_formula(k, n), jacobsthal_k(k, n)
            if printed != actual:
                notes.append(
                    f"Jacobsthal summation formula as printed gives {printed} at k={k}, n={n}; "
                    f"the diagonal sum and recurrence give {actual}"
                )
                break
    for k in range(2, max(bounds.max_k, 2) + 1):
        for n in range(1, bounds.max_n + 1):
            printed, actual = pell_printed_formula(k, n), pell_k(k, n)
            if printed != actual:
                notes.append(
                    f"Pell summation formula as printed gives {printed} at k={k}, n={n}; "
                    f"the diagonal sum and recurrence give {actual}"
                )
                break
    return notes


# Restricted

def _check_restricted_counts(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for r in RESTRICTIONS:
            enumerated = sum(1 for _ in enumerate_restricted(k, n, r))
            if enumerated != count_restricted(k, n, r):
                return f"{r.value} k={k}, n={n}: enumerated {enumerated}, recurrence {count_restricted(k, n, r)}"
    return None


def _check_restricted_constructions(bounds: Bounds) -> Optional[str]:
    for k, n in _grid(bounds):
        for r in RESTRICTIONS:
            built = [c.parts for c in construct_restricted(k, n, r)]
            filtered = {c.parts for c in enumerate_restricted(k, n, r)}
            if len(set(built)) != len(built) or set(built) != filtered:
                return f"{r.value} k={k}, n={n}: construction differs from the filtered enumeration"
    return None


def _check_fibonacci(bounds: Bounds) -> Optional[str]:
    for r, shift in FIBONACCI_SHIFT.items():
        for n in range(1, bounds.max_n + 1):
            if count_restricted(1, n, r) != fibonacci(n + shift):
                return f"{r.value} n={n}: {count_restricted(1, n, r)} != F({n + shift})"
    return None


# Series

def _check_family_series(bounds: Bounds) -> Optional[str]:
    order = bounds.max_n + 1
    for k in range(1, bounds.max_k + 1):
        expected = {
            Family.TOTAL: [(k + 1) ** (n - 1) for n in range(1, order)],
            Family.ONE_TWO: [count_restricted(k, n, Restriction.ONE_TWO) for n in range(1, order)],
            Family.ODD: [count_restricted(k, n, Restriction.ODD) for n in range(1, order)],
            Family.NO_ONES: [count_restricted(k, n, Restriction.NO_ONES) for n in range(1, order)],
            Family.JACOBSTHAL: [jacobsthal_k(k, n) for n in range(1, order)],
        }
        if k >= 2:
            expected[Family.PELL] = [pell_k(k, n) for n in range(1, order)]
        for family, values in expected.items():
            series = gf_coefficients(family, k, order).as_integers()
            if series[1:] != values:
                return f"{family.value} k={k}: series {series[1:]}, counts {values}"
    return None


def _check_unsimplified_forms(bounds: Bounds) -> Optional[str]:
    order = bounds.max_n + 1
    for k in range(1, bounds.max_k + 1):
        for r in RESTRICTIONS:
            unsimplified = gf_from_parts(allowed_parts_series(r.admits, order), k, order)
            if unsimplified != gf_coefficients(r.value, k, order):
                return f"{r.value} k={k}: F/(1-kF) differs from the closed form"
    return None


def _check_log_exp(bounds: Bounds) -> Optional[str]:
    order = bounds.max_n + 1
    for k in range(1, bounds.max_k + 1):
        series = 1 + total_series(k, order)
        if series.log().exp() != series:
            return f"k={k}: exp(log(1 + x/(1-(k+1)x))) differs"
    return None


# Cluster

def _cluster_oracle(bounds: Bounds, outcome: SuiteOutcome) -> Optional[str]:
    for g in (2, 3):
        for n in range(1, min(bounds.max_n, CLUSTER_ORACLE_MAX_N) + 1):
            q = g * n + bounds.extra_states
            decomposition = decompose_b(g, n, q)
            expected = set(enumerate_g_compositions(g, n))
            if set(decomposition) != expected:
                return f"g={g}, n={n}: decomposition keys differ from the g-compositions"
            for composition, value in decomposition.items():
                if abs(value) != closed_form_cg(g, composition):
                    return (
                        f"g={g}, n={n}: coefficient of {composition.render()} is {value}, "
                        f"closed form {closed_form_cg(g, composition)}"
                    )
            sign = observed_sign(decomposition.values())
            outcome.notes.append(f"b({n}) for g={g} has sign {sign:+d}")
    return None


def _identity_table(bounds: Bounds, outcome: SuiteOutcome) -> Optional[str]:
    failure = None
    for g in range(2, IDENTITY_MAX_G + 1):
        for n in range(1, min(bounds.max_n, IDENTITY_MAX_N) + 1):
            if (g ** (n - 1)) > bounds.cap:
                continue
            lhs, rhs = identity_sum(g, n)
            outcome.table.append({"g": g, "n": n, "lhs": str(lhs), "rhs": str(rhs)})
            if lhs != rhs and failure is None:
                failure = f"g={g}, n={n}: sum {lhs}, binomial(gn,n)/(gn) = {rhs}"
    return failure


SUITE_CHECKS: Dict[str, List[Tuple[str, Check]]] = {
    "core": [
        ("enumeration count", _check_counts),
        ("distinct and lexicographic", _check_distinct_and_ordered),
        ("form bijections and zero-count lemma", _check_bijections),
        ("parse/render roundtrip", _check_grammar),
        ("partitioned streams", _check_partitioned),
    ],
    "triangles": [
        ("recurrence equals closed form", _check_closed_forms),
        ("brute-force census", _check_census),
        ("row sums", _check_row_sums),
        ("recurrence constructions", _check_constructions),
        ("tribonacci diagonal", _check_tribonacci),
    ],
    "diagonals": [
        ("positive-part diagonal is k-Jacobsthal", _check_jacobsthal),
        ("zero-count diagonal is k-Pell", _check_pell),
        ("part-shift bijection", _check_part_shift_bijection),
        ("marker-to-B bijection", _check_marker_bijection),
    ],
    "restricted": [
        ("recurrence equals filtered count", _check_restricted_counts),
        ("constructions equal filtered sets", _check_restricted_constructions),
        ("k=1 Fibonacci counts", _check_fibonacci),
    ],
    "series": [
        ("generating functions equal counts", _check_family_series),
        ("F/(1-kF) equals closed forms", _check_unsimplified_forms),
        ("log/exp roundtrip", _check_log_exp),
    ],
}

SUITES = ("core", "triangles", "diagonals", "cluster", "restricted", "series")


def run_suite(suite: str, bounds: Bounds) -> SuiteOutcome:
    """Run one named suite"""
    logger.info(f"Running {suite} suite (max_n={bounds.max_n}, max_k={bounds.max_k})")
    outcome = SuiteOutcome(suite)
    if suite == "cluster":
        # these checks also fill the outcome's notes and identity table
        outcome.checks.append(_run_check(
            suite, "decomposition matches closed form",
            lambda b: _cluster_oracle(b, outcome), bounds,
        ))
        outcome.checks.append(_run_check(
            suite, "coefficient sum identity",
            lambda b: _identity_table(b, outcome), bounds,
        ))
    else:
        for name, check in SUITE_CHECKS[suite]:
            outcome.checks.append(_run_check(suite, name, check, bounds))
    if suite == "diagonals":
        outcome.notes.extend(_printed_formula_notes(bounds))
    logger.info(f"Suite {suite}: {sum(c.passed for c in outcome.checks)}/{len(outcome.checks)} passed")
    return outcome


def expand_suites(suite: str) -> List[str]:
    return list(SUITES) if suite == "all" else [suite]


def run_verify(suite: str, bounds: Bounds, jobs: int = 1) -> List[SuiteOutcome]:
    """Run the named suite (or all of them); outcomes come back in suite order"""
    names = expand_suites(suite)
    return Parallel(n_jobs=jobs, prefer="threads")(
        delayed(run_suite)(name, bounds) for name in names
    )
