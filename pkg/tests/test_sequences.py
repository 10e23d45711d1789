"""
k-Jacobsthal and k-Pell sequences, B compositions and the diagonal bijections
"""
import pytest

from multicomp.core import colored, enumerate_compositions, render, to_zero_form, zero_count, zeros
from multicomp.errors import CompositionSemanticError, DomainError
from multicomp.restricted import Restriction, enumerate_restricted, fibonacci
from multicomp.sequences import (
    ONE_PRIME,
    BComposition,
    BPart,
    b_symbols,
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


def test_jacobsthal_values():
    assert [jacobsthal_k(2, n) for n in range(8)] == [0, 1, 1, 3, 5, 11, 21, 43]
    assert jacobsthal_k(2, 6) == 21
    assert jacobsthal_k(3, 5) == 19


@pytest.mark.parametrize("n", range(0, 15))
def test_jacobsthal_k1_is_fibonacci(n):
    assert jacobsthal_k(1, n) == fibonacci(n)


def test_pell_values():
    assert [pell_k(2, n) for n in range(7)] == [0, 1, 2, 5, 12, 29, 70]
    assert pell_k(3, 5) == 33
    assert [pell_k(k, 1) for k in (2, 3, 4)] == [1, 1, 1]
    with pytest.raises(DomainError):
        pell_k(1, 4)


def test_b_symbols_order():
    assert [part.text for part in b_symbols(4)] == ["1", "1p", "2", "3", "4"]


def test_enumerate_b_small():
    assert [b.render() for b in enumerate_B(2, 2)] == ["1+1", "1+1p", "1p+1", "1p+1p", "2"]
    assert [b.render() for b in enumerate_B(2, 1)] == ["1", "1p"]
    assert sum(1 for _ in enumerate_B(3, 3)) == 13 == pell_k(3, 4)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_b_counts_are_pell(k):
    for n in range(2, 9):
        assert sum(1 for _ in enumerate_B(k, n - 1)) == pell_k(k, n)


def test_b_composition_validation():
    with pytest.raises(CompositionSemanticError):
        BComposition(2, (BPart(3),))
    with pytest.raises(CompositionSemanticError):
        BComposition(2, (BPart(2, True),))
    with pytest.raises(CompositionSemanticError):
        BComposition(2, ())
    with pytest.raises(DomainError):
        BComposition(1, (BPart(1),))
    b = BComposition(3, (ONE_PRIME, BPart(3)))
    assert b.n == 4
    assert b.primed_count == 1
    assert b.to_json_dict() == {"k": 3, "form": "b", "parts": ["1'", 3]}


def test_part_shift_map():
    assert theorem1_map(colored(2, [(2, 1), (1, 2)])) == colored(2, [(3, 1), (2, 2)])
    assert theorem1_map(colored(2, [(1, 1)])) == colored(2, [(2, 1)])
    assert theorem1_inverse(colored(2, [(3, 1), (2, 2)])) == colored(2, [(2, 1), (1, 2)])
    assert theorem1_inverse(colored(2, [(2, 1)])) == colored(2, [(1, 1)])
    with pytest.raises(DomainError):
        theorem1_inverse(colored(2, [(2, 1), (1, 2)]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_part_shift_map_is_onto_compositions_without_one(k):
    for n in range(1, 9):
        image = [
            theorem1_map(c).parts
            for i in range(1, n + 1)
            for c in enumerate_compositions(k, n + 1 - i)
            if c.positive_count == i
        ]
        target = {c.parts for c in enumerate_restricted(k, n + 1, Restriction.NO_ONES)}
        assert len(image) == len(set(image)) == jacobsthal_k(k, n)
        assert set(image) == target


def test_marker_to_b_map():
    assert theorem2_map(zeros(2, [1, 0, 1, 1])).render() == "2+1"
    assert theorem2_map(zeros(2, [2])).render() == "1p"
    assert theorem2_map(zeros(2, [1, 1])).render() == "1"
    assert theorem2_map(colored(2, [(1, 1), (1, 2), (1, 1)])).render() == "2+1"
    assert theorem2_inverse(BComposition(2, (BPart(2), BPart(1)))) == zeros(2, [1, 0, 1, 1])
    assert theorem2_inverse(BComposition(2, (ONE_PRIME,))) == zeros(2, [2])


def test_marker_to_b_map_domain():
    with pytest.raises(DomainError):
        theorem2_map(colored(1, [(2, 1)]))
    with pytest.raises(DomainError):
        theorem2_map(colored(2, [(1, 1)]))


@pytest.mark.parametrize("k", [2, 3])
def test_marker_to_b_map_is_a_bijection_on_the_zero_diagonal(k):
    for n in range(2, 9):
        image = []
        for i in range(n - 1):
            for c in enumerate_compositions(k, n - i):
                if zero_count(c) == i:
                    b = theorem2_map(c)
                    assert b.n == n - 1
                    assert theorem2_inverse(b) == to_zero_form(c)
                    image.append(b.parts)
        target = {b.parts for b in enumerate_B(k, n - 1)}
        assert len(image) == len(set(image))
        assert set(image) == target


def test_diagonal_sum_examples():
    assert diagonal_sum(2, "zeros", 4) == 12
    assert diagonal_sum(2, "positive_parts", 4) == 5
    assert [diagonal_sum(1, "positive_parts", n) for n in range(1, 10)] == [fibonacci(n) for n in range(1, 10)]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_diagonal_sums_equal_recurrences(k):
    for n in range(1, 16):
        assert diagonal_sum(k, "positive_parts", n) == jacobsthal_k(k, n)
        if k >= 2:
            assert diagonal_sum(k, "zeros", n) == pell_k(k, n)


def test_diagonal_sum_domain():
    with pytest.raises(DomainError):
        diagonal_sum(1, "zeros", 4)
    with pytest.raises(DomainError):
        diagonal_sum(2, "all_parts", 4)


def test_printed_summation_formulas_disagree_with_diagonal_sums():
    # the formulas evaluated exactly as printed are off by an index shift
    assert jacobsthal_printed_formula(2, 4) == 3
    assert jacobsthal_k(2, 4) == diagonal_sum(2, "positive_parts", 4) == 5
    assert pell_printed_formula(2, 3) == 12
    assert pell_k(2, 3) == diagonal_sum(2, "zeros", 3) == 5


def test_b_composition_text():
    assert render(colored(2, [(1, 1)])) == "1_1"
    assert BComposition(2, (BPart(1), ONE_PRIME, BPart(2))).render() == "1+1p+2"
