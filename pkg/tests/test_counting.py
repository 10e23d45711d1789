"""
Multinomial counts and counting triangles
"""
from math import comb

import pytest

from multicomp.core import enumerate_compositions, to_zero_form
from multicomp.counting import (
    Statistic,
    as_statistic,
    construct_by_recurrence,
    count_all_parts,
    count_positive_parts,
    count_total,
    count_zeros,
    multinomial,
    triangle,
)
from multicomp.errors import DomainError


def _rows(text):
    return [[int(v) for v in line.split()] for line in text.splitlines()]


def test_multinomial_examples():
    assert multinomial(3, 2, 2) == 6
    assert multinomial(3, 4, 3) == 12
    assert multinomial(3, 7, 2) == 0


@pytest.mark.parametrize("n", range(0, 8))
def test_multinomial_k1_is_binomial(n):
    assert [multinomial(n, l, 1) for l in range(n + 1)] == [comb(n, l) for l in range(n + 1)]


def test_count_total():
    assert count_total(2, 3) == 9
    assert count_total(4, 6) == 3125
    assert [count_total(1, n) for n in range(1, 6)] == [1, 2, 4, 8, 16]


def test_closed_form_examples():
    assert count_all_parts(2, 4, 4) == 7
    assert count_all_parts(3, 4, 5) == 12
    assert count_positive_parts(2, 5, 4) == 32
    assert count_positive_parts(3, 5, 3) == 54
    assert count_zeros(3, 4, 2) == 18
    assert count_zeros(2, 5, 2) == 24


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 5, 7])
def test_boundary_values(k, n):
    assert count_all_parts(k, n, 1) == 1
    assert count_positive_parts(k, n, 1) == 1
    assert count_zeros(k, n, 0) == 2 ** (n - 1)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_upper_boundary_values(k):
    for n in range(1, 11):
        top_parts = n * k - k + 1
        top_zeros = (n - 1) * (k - 1)
        assert count_all_parts(k, n, top_parts) == 1
        assert count_all_parts(k, n, top_parts + 1) == 0
        assert count_positive_parts(k, n, n) == k ** (n - 1)
        assert count_zeros(k, n, top_zeros) == 1
        assert count_zeros(k, n, top_zeros + 1) == 0


@pytest.mark.parametrize("k, statistic, rows, name", [
    (2, "all_parts", 4, "table2a.txt"),
    (3, "all_parts", 4, "table2b.txt"),
    (2, "positive_parts", 5, "table3a.txt"),
    (3, "positive_parts", 5, "table3b.txt"),
    (2, "zeros", 5, "table4a.txt"),
    (3, "zeros", 5, "table4b.txt"),
])
def test_triangles_match_golden_tables(golden, k, statistic, rows, name):
    built = triangle(k, statistic, rows)
    assert [list(row) for row in built.rows] == _rows(golden(name))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("statistic", list(Statistic))
def test_recurrence_equals_closed_form(k, statistic):
    closed = {
        Statistic.ALL_PARTS: count_all_parts,
        Statistic.POSITIVE_PARTS: count_positive_parts,
        Statistic.ZEROS: count_zeros,
    }[statistic]
    built = triangle(k, statistic, 12)
    for n in range(1, 13):
        assert len(built.row(n)) == statistic.row_length(k, n)
        for offset, value in enumerate(built.row(n)):
            assert closed(k, n, statistic.first_index + offset) == value
        assert sum(built.row(n)) == (k + 1) ** (n - 1)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("statistic", list(Statistic))
def test_triangle_matches_brute_force(k, statistic):
    rows = 6
    built = triangle(k, statistic, rows)
    for n in range(1, rows + 1):
        census = {}
        for c in enumerate_compositions(k, n):
            l = statistic.measure(to_zero_form(c))
            census[l] = census.get(l, 0) + 1
        for l, count in census.items():
            assert built.entry(n, l) == count
        assert sum(census.values()) == sum(built.row(n))


def test_entry_is_zero_outside_triangle():
    built = triangle(2, "zeros", 4)
    assert built.entry(4, 7) == 0
    assert built.entry(9, 0) == 0
    assert built.entry(2, -1) == 0


def test_all_parts_diagonal_is_tribonacci():
    built = triangle(2, Statistic.ALL_PARTS, 8)
    assert [built.diagonal(n) for n in range(1, 9)] == [1, 1, 2, 4, 7, 13, 24, 44]


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("statistic", list(Statistic))
def test_construction_rebuilds_the_sets(k, statistic):
    n = 5
    built = construct_by_recurrence(k, n, statistic)
    expected = {}
    for c in enumerate_compositions(k, n):
        z = to_zero_form(c)
        expected.setdefault(statistic.measure(z), set()).add(z.terms)
    assert set(built) == set(expected)
    for l, members in built.items():
        terms = [z.terms for z in members]
        assert len(terms) == len(set(terms))
        assert set(terms) == expected[l]


def test_construction_sizes_follow_table():
    built = construct_by_recurrence(2, 4, "zeros")
    assert {l: len(members) for l, members in built.items()} == {0: 8, 1: 12, 2: 6, 3: 1}


def test_unknown_statistic():
    with pytest.raises(DomainError):
        as_statistic("parts")
    with pytest.raises(DomainError):
        triangle(0, "zeros", 3)
