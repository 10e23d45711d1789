"""
Bijections between the three multicomposition forms

A part c with color l corresponds to l-1 zeros followed by c; the marker
board reads J inside a part and S_m at the boundary before a color-m part.
"""

from typing import List, Tuple

from .compositions import (
    JOIN,
    ColoredComposition,
    MarkerSequence,
    Part,
    ZeroComposition,
)


def to_zero_form(c: ColoredComposition) -> ZeroComposition:
    """Replace each color-l part by l-1 zeros and its value"""
    terms: List[int] = []
    for value, color in c.parts:
        terms.extend([0] * (color - 1))
        terms.append(value)
    return ZeroComposition.trusted(c.k, tuple(terms))


def to_colored_form(z: ZeroComposition) -> ColoredComposition:
    """Inverse of to_zero_form: a run of r zeros colors the next part r+1"""
    parts: List[Part] = []
    run = 0
    for term in z.terms:
        if term == 0:
            run += 1
        else:
            parts.append(Part(term, run + 1))
            run = 0
    return ColoredComposition.trusted(z.k, tuple(parts))


def parts_from_markers(markers: Tuple[int, ...]) -> Tuple[Part, ...]:
    """Read a marker tuple as colored parts (hot path of enumeration)"""
    parts = []
    value = 1
    color = 1
    for marker in markers:
        if marker == JOIN:
            value += 1
        else:
            parts.append(Part(value, color))
            value = 1
            color = marker
    parts.append(Part(value, color))
    return tuple(parts)


def to_markers(c: ColoredComposition) -> MarkerSequence:
    """Board reading of c: J inside parts, S_color at each later part boundary"""
    markers: List[int] = []
    for index, (value, color) in enumerate(c.parts):
        if index:
            markers.append(color)
        markers.extend([JOIN] * (value - 1))
    return MarkerSequence.trusted(c.k, c.n, tuple(markers))


def from_markers(m: MarkerSequence) -> ColoredComposition:
    """Inverse of to_markers"""
    return ColoredComposition.trusted(m.k, parts_from_markers(m.markers))


def zero_count(c: ColoredComposition) -> int:
    """Sum of (color - 1) over the parts; the number of zeros of the zero form"""
    return sum(color - 1 for _, color in c.parts)
