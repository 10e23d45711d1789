"""
Sparse polynomials in the Boltzmann-factor variables s(1), ..., s(q)

A monomial is a tuple of (state, exponent) pairs sorted by state, with
positive exponents only; the empty tuple is the constant monomial (needed
for Z(0) = 1).
"""

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..errors import DomainError

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]


def make_monomial(exponents: Mapping[int, int]) -> Monomial:
    """Canonical monomial from a state -> exponent mapping, dropping zero exponents"""
    return tuple(sorted((state, exp) for state, exp in exponents.items() if exp))


def _multiply_monomials(a: Monomial, b: Monomial) -> Monomial:
    merged: Dict[int, int] = dict(a)
    for state, exp in b:
        merged[state] = merged.get(state, 0) + exp
    return tuple(sorted(merged.items()))


class StatePolynomial:
    """Immutable exact-rational polynomial over s(1..q)"""

    __slots__ = ("_q", "_terms")

    def __init__(self, q: int, terms: Mapping[Monomial, Scalar] = None):
        if not isinstance(q, int) or q < 1:
            raise DomainError(f"q must be a positive integer, got {q!r}")
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            for state, exp in monomial:
                if not 1 <= state <= q or exp < 1:
                    raise DomainError(f"monomial {monomial} is not over s(1..{q})")
            if coefficient:
                cleaned[monomial] = Fraction(coefficient)
        self._q = q
        self._terms = MappingProxyType(cleaned)

    @classmethod
    def _trusted(cls, q: int, terms: Dict[Monomial, Fraction]) -> "StatePolynomial":
        obj = object.__new__(cls)
        obj._q = q
        obj._terms = MappingProxyType({m: c for m, c in terms.items() if c})
        return obj

    @classmethod
    def zero(cls, q: int) -> "StatePolynomial":
        return cls(q)

    @classmethod
    def one(cls, q: int) -> "StatePolynomial":
        return cls(q, {(): 1})

    @classmethod
    def monomial(cls, q: int, exponents: Mapping[int, int], coefficient: Scalar = 1) -> "StatePolynomial":
        return cls(q, {make_monomial(exponents): coefficient})

    @property
    def q(self) -> int:
        return self._q

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def monomials(self) -> Iterator[Monomial]:
        return iter(sorted(self._terms, key=_render_order))

    def degrees(self) -> set:
        return {sum(exp for _, exp in monomial) for monomial in self._terms}

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, StatePolynomial):
            return self._q == other._q and dict(self._terms) == dict(other._terms)
        if isinstance(other, Rational):
            if other == 0:
                return self.is_zero()
            return dict(self._terms) == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._q, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"StatePolynomial(q={self._q}, {self.render()})"

    # Ring operations

    def _same_q(self, other: "StatePolynomial") -> None:
        if other._q != self._q:
            raise DomainError(f"cannot combine polynomials over q={self._q} and q={other._q}")

    def __add__(self, other):
        if not isinstance(other, StatePolynomial):
            return NotImplemented
        self._same_q(other)
        total = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total[monomial] = total.get(monomial, 0) + coefficient
        return StatePolynomial._trusted(self._q, total)

    def __neg__(self):
        return StatePolynomial._trusted(self._q, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, StatePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return StatePolynomial._trusted(self._q, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, StatePolynomial):
            return NotImplemented
        self._same_q(other)
        product: Dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                monomial = _multiply_monomials(ma, mb)
                product[monomial] = product.get(monomial, 0) + ca * cb
        return StatePolynomial._trusted(self._q, product)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational) and other != 0:
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    @staticmethod
    def sum(polynomials: Iterable["StatePolynomial"], q: int) -> "StatePolynomial":
        total: Dict[Monomial, Fraction] = {}
        for polynomial in polynomials:
            if polynomial.q != q:
                raise DomainError(f"cannot combine polynomials over q={q} and q={polynomial.q}")
            for monomial, coefficient in polynomial.terms.items():
                total[monomial] = total.get(monomial, 0) + coefficient
        return StatePolynomial._trusted(q, total)

    # Rendering

    def render(self) -> str:
        """Deterministic text such as  -1/2*s(1)^2 - s(2)*s(1)"""
        if self.is_zero():
            return "0"
        pieces = []
        for index, monomial in enumerate(self.monomials()):
            coefficient = self._terms[monomial]
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            factors = render_monomial(monomial)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude}*{factors}"
            if index == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)


def render_monomial(monomial: Monomial) -> str:
    """s(4)*s(2)^2 style, states in decreasing order"""
    factors = []
    for state, exp in reversed(monomial):
        factors.append(f"s({state})" if exp == 1 else f"s({state})^{exp}")
    return "*".join(factors)


def _render_order(monomial: Monomial):
    degree = sum(exp for _, exp in monomial)
    return (degree, tuple(reversed(monomial)))
