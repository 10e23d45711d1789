"""
Exact power series and the generating functions of the counting sequences
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multicomp.errors import DomainError, SeriesError
from multicomp.restricted import Restriction, count_restricted
from multicomp.sequences import jacobsthal_k, pell_k
from multicomp.series import (
    PowerSeries,
    allowed_parts_series,
    divide,
    exp,
    expand_rational,
    gf_coefficients,
    gf_from_parts,
    log,
    log_recurrence,
    multiply,
    total_series,
    total_series_unsimplified,
)


@pytest.mark.parametrize("numerator, denominator, order, expected", [
    ([0, 1], [1, -3], 5, [0, 1, 3, 9, 27]),
    ([0, 1], [1, -2, -1], 6, [0, 1, 2, 5, 12, 29]),
    ([0, 0, 1], [1, -1, -2], 7, [0, 0, 1, 1, 3, 5, 11]),
])
def test_expand_rational(numerator, denominator, order, expected):
    series = expand_rational(numerator, denominator, order)
    assert series.order == order
    assert series.as_integers() == expected


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=5),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-9, 9), max_size=4),
)
def test_unit_denominator_expands_to_integers(numerator, unit, tail):
    series = expand_rational(numerator, [unit] + tail, 12)
    assert series.is_integral()
    # the expansion really inverts the denominator
    assert (series * PowerSeries.of([unit] + tail, 12)) == PowerSeries.of(numerator, 12)


def test_expand_rational_rejects_zero_constant_denominator():
    with pytest.raises(SeriesError):
        expand_rational([1], [0, 1], 4)


def test_multiply():
    product = multiply(PowerSeries.of([1, 1], 3), PowerSeries.of([1, -1], 3))
    assert product.as_integers() == [1, 0, -1]
    geometric = expand_rational([1], [1, -1], 5)
    assert (geometric * geometric).as_integers() == [1, 2, 3, 4, 5]


def test_divide_and_reciprocal():
    one_minus_x = PowerSeries.of([1, -1], 6)
    assert one_minus_x.reciprocal().as_integers() == [1] * 6
    assert divide(PowerSeries.of([1], 6), one_minus_x) == one_minus_x.reciprocal()
    with pytest.raises(SeriesError):
        PowerSeries.of([1], 4) / PowerSeries.of([0, 1], 4)


def test_log_examples():
    assert log(expand_rational([1], [1, -1], 5)).coefficients == (
        0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)
    )
    assert log(PowerSeries.of([1, 1], 4)).coefficients == (0, 1, Fraction(-1, 2), Fraction(1, 3))


def test_log_and_exp_domains():
    with pytest.raises(SeriesError):
        log(PowerSeries.of([2, 1], 4))
    with pytest.raises(SeriesError):
        exp(PowerSeries.of([1, 1], 4))


def test_log_recurrence_is_ring_generic():
    # plain Fractions: log(1 + x) to order 4
    assert log_recurrence([Fraction(1), Fraction(1), Fraction(0), Fraction(0)]) == [
        1, Fraction(-1, 2), Fraction(1, 3)
    ]


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_exp_log_roundtrip(tail):
    series = PowerSeries.of([1] + tail, len(tail) + 1)
    assert exp(log(series)) == series
    assert log(exp(series - 1)) == series - 1


@given(
    st.lists(st.integers(-5, 5), min_size=6, max_size=6),
    st.lists(st.integers(-5, 5), min_size=6, max_size=6),
)
def test_product_then_division(a, b):
    x = PowerSeries.of(a, 6)
    y = PowerSeries.of([1] + b[1:], 6)
    assert (x * y) / y == x


def test_derivative():
    assert PowerSeries.of([1, 2, 3], 3).derivative().as_integers() == [2, 6]
    with pytest.raises(SeriesError):
        PowerSeries.of([1], 1).derivative()


@pytest.mark.parametrize("family, k, expected", [
    ("total", 2, [0, 1, 3, 9, 27, 81]),
    ("one_two", 2, [0, 1, 3, 8, 22, 60]),
    ("odd", 3, [0, 1, 3, 10, 33, 109]),
])
def test_family_coefficients(family, k, expected):
    assert gf_coefficients(family, k, 6).as_integers() == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_total_forms_agree_to_order_30(k):
    assert total_series(k, 30) == total_series_unsimplified(k, 30)
    assert gf_coefficients("total", k, 30).as_integers()[1:] == [(k + 1) ** (n - 1) for n in range(1, 30)]


@pytest.mark.parametrize("restriction", [Restriction.ONE_TWO, Restriction.ODD, Restriction.NO_ONES])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_closed_forms_equal_part_series_form(restriction, k):
    order = 20
    unsimplified = gf_from_parts(allowed_parts_series(restriction.admits, order), k, order)
    assert unsimplified == gf_coefficients(restriction.value, k, order)
    assert unsimplified.as_integers()[1:] == [count_restricted(k, n, restriction) for n in range(1, order)]


@pytest.mark.parametrize("restriction", ["one_two", "odd", "no_ones"])
@pytest.mark.parametrize("k", ["2", "3", "4"])
def test_series_reproduce_golden_rows(table5, restriction, k):
    assert gf_coefficients(restriction, int(k), 9).as_integers()[1:] == table5[restriction][k]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_jacobsthal_and_pell_series(k):
    assert gf_coefficients("jacobsthal", k, 12).as_integers() == [jacobsthal_k(k, n) for n in range(12)]
    if k >= 2:
        assert gf_coefficients("pell", k, 12).as_integers() == [pell_k(k, n) for n in range(12)]


def test_family_errors():
    with pytest.raises(DomainError):
        gf_coefficients("pell", 1, 5)
    with pytest.raises(DomainError):
        gf_coefficients("even", 2, 5)
    with pytest.raises(SeriesError):
        gf_from_parts(PowerSeries.of([1, 1], 4), 2, 4)
