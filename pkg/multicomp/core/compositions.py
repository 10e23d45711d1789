#!/usr/bin/env python3
"""
Multicomposition value types
Colored-parts form, internal-zeros form and the J / S_m marker board
"""

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Tuple

from ..errors import CompositionSemanticError, DomainError, MixedKError

# Marker encoding: 0 is Join, m in 1..k is Separate(m); natural int order
# gives J < S1 < ... < Sk.
JOIN = 0


def marker_label(marker: int) -> str:
    """Render a marker as J or S<m>"""
    return "J" if marker == JOIN else f"S{marker}"


def check_k(k: int) -> None:
    """Reject a non-positive color count"""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")


def check_n(n: int) -> None:
    """Reject a non-positive total"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def same_k(*values) -> int:
    """Return the shared k of the given values, refusing mixed-k input"""
    ks = {value.k for value in values}
    if len(ks) != 1:
        raise MixedKError(f"values built for different k: {sorted(ks)}")
    return ks.pop()


class Part(NamedTuple):
    """A colored part: positive value with color 1..k"""
    value: int
    color: int


@dataclass(frozen=True, slots=True)
class ColoredComposition:
    """k-composition in colored-parts form; first part has color 1"""
    k: int
    parts: Tuple[Part, ...]

    def __post_init__(self):
        check_k(self.k)
        parts = tuple(Part(*part) for part in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise CompositionSemanticError("a composition needs at least one part")
        for index, (value, color) in enumerate(parts):
            if value < 1:
                raise CompositionSemanticError(f"part {index + 1} has non-positive value {value}")
            if not 1 <= color <= self.k:
                raise CompositionSemanticError(
                    f"part {index + 1} has color {color} outside 1..{self.k}"
                )
        if parts[0].color != 1:
            raise CompositionSemanticError("the first part must have color 1")

    @classmethod
    def trusted(cls, k: int, parts: Tuple[Part, ...]) -> "ColoredComposition":
        """Build without validation; callers guarantee the invariants"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "parts", parts)
        return obj

    @property
    def n(self) -> int:
        return sum(part.value for part in self.parts)

    @property
    def positive_count(self) -> int:
        return len(self.parts)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(part.value for part in self.parts)


@dataclass(frozen=True, slots=True)
class ZeroComposition:
    """k-composition in internal-zeros form"""
    k: int
    terms: Tuple[int, ...]

    def __post_init__(self):
        check_k(self.k)
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise CompositionSemanticError("a composition needs at least one term")
        if any(term < 0 for term in terms):
            raise CompositionSemanticError("terms must be nonnegative")
        if terms[0] == 0:
            raise CompositionSemanticError("the first term must be positive")
        if terms[-1] == 0:
            raise CompositionSemanticError("the last term must be positive")
        run = 0
        for index, term in enumerate(terms):
            if term == 0:
                run += 1
                if run > self.k - 1:
                    raise CompositionSemanticError(
                        f"zero run ending at term {index + 1} has length {run} > k-1 = {self.k - 1}"
                    )
            else:
                run = 0

    @classmethod
    def trusted(cls, k: int, terms: Tuple[int, ...]) -> "ZeroComposition":
        """Build without validation; callers guarantee the invariants"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "terms", terms)
        return obj

    @property
    def n(self) -> int:
        return sum(self.terms)

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def zero_count(self) -> int:
        return sum(1 for term in self.terms if term == 0)


@dataclass(frozen=True, slots=True)
class MarkerSequence:
    """Join / separate choices at the n-1 internal positions of a length-n board"""
    k: int
    n: int
    markers: Tuple[int, ...]

    def __post_init__(self):
        check_k(self.k)
        check_n(self.n)
        markers = tuple(self.markers)
        object.__setattr__(self, "markers", markers)
        if len(markers) != self.n - 1:
            raise CompositionSemanticError(
                f"a board of length {self.n} needs {self.n - 1} markers, got {len(markers)}"
            )
        for marker in markers:
            if not JOIN <= marker <= self.k:
                raise CompositionSemanticError(
                    f"marker {marker_label(marker)} is not one of J, S1..S{self.k}"
                )

    @classmethod
    def trusted(cls, k: int, n: int, markers: Tuple[int, ...]) -> "MarkerSequence":
        """Build without validation; callers guarantee the invariants"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "markers", markers)
        return obj

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(marker_label(marker) for marker in self.markers)


def colored(k: int, parts: Iterable[Tuple[int, int]]) -> ColoredComposition:
    """Convenience constructor: colored(2, [(2, 1), (1, 2)]) is 2_1+1_2"""
    return ColoredComposition(k, tuple(Part(value, color) for value, color in parts))


def zeros(k: int, terms: Iterable[int]) -> ZeroComposition:
    """Convenience constructor: zeros(2, [2, 0, 1]) is 2+0+1"""
    return ZeroComposition(k, tuple(terms))


def concatenate(a: ColoredComposition, b: ColoredComposition, color: int = 1) -> ColoredComposition:
    """a followed by b, the first part of b recolored to `color`

    On the marker board this puts S_color at the junction, so the result is a
    k-composition of a.n + b.n. Values built for different k are refused.
    """
    k = same_k(a, b)
    if not 1 <= color <= k:
        raise DomainError(f"junction color must be in 1..{k}, got {color}")
    (value, _), *rest = b.parts
    return ColoredComposition.trusted(k, a.parts + (Part(value, color),) + tuple(rest))
