"""
Cluster expansion of g-exclusion statistics
"""
from fractions import Fraction
from math import lcm

import pytest

import multicomp.cluster.exclusion as exclusion
from multicomp.cluster import (
    GComposition,
    StatePolynomial,
    closed_form_cg,
    cluster_coefficients,
    decompose_b,
    enumerate_g_compositions,
    identity_sum,
    k_for_g,
    observed_sign,
    partition_function,
    term_for_composition,
)
from multicomp.errors import CompositionSemanticError, DomainError, ResidualError


def _poly(q, terms):
    return StatePolynomial(q, {tuple(sorted(m.items())): c for m, c in terms})


# StatePolynomial

def test_polynomial_ring_operations():
    a = StatePolynomial.monomial(4, {3: 2, 1: 1})
    b = StatePolynomial.monomial(4, {2: 1}, Fraction(1, 2))
    assert (a + a).coefficient(((1, 1), (3, 2))) == 2
    assert (a - a).is_zero()
    assert (3 * b).coefficient(((2, 1),)) == Fraction(3, 2)
    assert (b / 2).coefficient(((2, 1),)) == Fraction(1, 4)
    assert dict((a * b).terms) == {((1, 1), (2, 1), (3, 2)): Fraction(1, 2)}
    assert a * StatePolynomial.one(4) == a
    assert (a * b).degrees() == {4}


def test_polynomial_render():
    assert StatePolynomial.monomial(4, {3: 2, 1: 1}).render() == "s(3)^2*s(1)"
    assert StatePolynomial.zero(3).render() == "0"
    assert StatePolynomial.one(3).render() == "1"
    b2 = cluster_coefficients(2, 2, 2)[1]
    assert b2.render() == "-1/2*s(1)^2 - s(2)*s(1) - 1/2*s(2)^2"


def test_polynomial_checks_states():
    with pytest.raises(DomainError):
        StatePolynomial.monomial(3, {4: 1})
    with pytest.raises(DomainError):
        StatePolynomial.one(3) + StatePolynomial.one(4)


# Partition functions

def test_partition_function_examples():
    assert partition_function(2, 1, 5) == _poly(5, [({k: 1}, 1) for k in range(1, 6)])
    assert partition_function(2, 2, 4) == _poly(4, [({3: 1, 1: 1}, 1), ({4: 1, 1: 1}, 1), ({4: 1, 2: 1}, 1)])
    assert partition_function(3, 3, 6).is_zero()
    assert partition_function(2, 0, 3) == StatePolynomial.one(3)


def test_partition_function_parallel_branches_agree():
    assert partition_function(2, 3, 9, jobs=2) == partition_function(2, 3, 9)


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_partition_function_monomials(g, n):
    z = partition_function(g, n, g * n + 2)
    assert not z.is_zero()
    for monomial in z.monomials():
        states = [state for state, _ in monomial]
        assert sum(exp for _, exp in monomial) == n
        assert all(b - a >= g for a, b in zip(states, states[1:]))


# Cluster coefficients

def test_b1_is_z1():
    assert cluster_coefficients(2, 1, 6)[0] == partition_function(2, 1, 6)


def test_b2_for_two_exclusion():
    q = 6
    expected = _poly(
        q,
        [({k: 2}, Fraction(-1, 2)) for k in range(1, q + 1)]
        + [({k + 1: 1, k: 1}, -1) for k in range(1, q)],
    )
    assert cluster_coefficients(2, 2, q)[1] == expected


def test_b3_for_two_exclusion():
    b3 = cluster_coefficients(2, 3, 8)[2]
    assert b3.coefficient(((1, 1), (2, 1), (3, 1))) == 1
    assert b3.coefficient(((1, 3),)) == Fraction(1, 3)
    assert b3.coefficient(((1, 1), (2, 2))) == 1


@pytest.mark.parametrize("g", [2, 3])
def test_b_denominators_divide_lcm(g):
    for n, b in enumerate(cluster_coefficients(g, 4, g * 4 + 2), start=1):
        bound = lcm(*range(1, n + 1))
        assert all(bound % c.denominator == 0 for c in b.terms.values())


def test_term_for_composition_examples():
    q = 5
    assert term_for_composition(GComposition(2, (2, 1)), q) == _poly(
        q, [({k + 1: 2, k: 1}, 1) for k in range(1, q)]
    )
    assert term_for_composition(GComposition(3, (1, 0, 1)), q) == _poly(
        q, [({k + 2: 1, k: 1}, 1) for k in range(1, q - 1)]
    )
    assert term_for_composition(GComposition(4, (3,)), q) == _poly(q, [({k: 3}, 1) for k in range(1, q + 1)])


# Decomposition

def _by_parts(decomposition):
    return {c.parts: v for c, v in decomposition.items()}


def test_decompose_examples():
    assert _by_parts(decompose_b(2, 3, 10)) == {
        (3,): Fraction(1, 3), (2, 1): 1, (1, 2): 1, (1, 1, 1): 1
    }
    assert _by_parts(decompose_b(2, 1, 4)) == {(1,): 1}
    assert _by_parts(decompose_b(3, 2, 10)) == {
        (2,): Fraction(-1, 2), (1, 1): -1, (1, 0, 1): -1
    }


def test_decompose_needs_enough_states():
    with pytest.raises(DomainError):
        decompose_b(2, 3, 5)


def test_decompose_reports_residual(monkeypatch):
    full = exclusion.enumerate_g_compositions
    monkeypatch.setattr(exclusion, "enumerate_g_compositions", lambda g, n: full(g, n)[:-1])
    with pytest.raises(ResidualError):
        decompose_b(2, 3, 8)


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_decomposition_matches_closed_form(g, n):
    decomposition = decompose_b(g, n, g * n + 2)
    assert set(decomposition) == set(enumerate_g_compositions(g, n))
    for composition, value in decomposition.items():
        assert abs(value) == closed_form_cg(g, composition)
    assert observed_sign(decomposition.values()) == (-1) ** (n + 1)


def test_closed_form_examples():
    assert closed_form_cg(2, GComposition(2, (3,))) == Fraction(1, 3)
    assert closed_form_cg(2, GComposition(2, (1, 1, 1))) == 1
    assert closed_form_cg(3, GComposition(3, (2,))) == Fraction(1, 2)
    assert closed_form_cg(2, GComposition(2, (2, 1))) == 1


def test_identity_examples():
    assert identity_sum(2, 3) == (Fraction(10, 3), Fraction(10, 3))
    assert identity_sum(2, 1) == (1, 1)
    assert identity_sum(3, 2) == (Fraction(5, 2), Fraction(5, 2))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_identity_holds(g):
    for n in range(1, 8):
        lhs, rhs = identity_sum(g, n)
        assert lhs == rhs


# g-compositions

def test_g_compositions():
    assert k_for_g(2) == 1
    assert k_for_g(4) == 3
    assert [c.parts for c in enumerate_g_compositions(2, 3)] == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    assert len(enumerate_g_compositions(3, 4)) == 3 ** 3
    with pytest.raises(DomainError):
        k_for_g(1)


@pytest.mark.parametrize("g, parts", [(3, (1, 0, 0, 1)), (2, (1, 0, 1)), (3, (0, 1)), (3, (1, 0)), (2, ())])
def test_g_composition_validation(g, parts):
    with pytest.raises(CompositionSemanticError):
        GComposition(g, parts)


def test_observed_sign():
    assert observed_sign([Fraction(1, 3), 1]) == 1
    assert observed_sign([-1, Fraction(-1, 2)]) == -1
    assert observed_sign([1, -1]) == 0
