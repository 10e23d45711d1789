"""
Text grammar and JSON encoding for the three multicomposition forms

    zeros:   term ("+" term)*        term   := decimal >= 0
    colored: part ("+" part)*        part   := value "_" color
    markers: marker ("," marker)*    marker := "J" | "S" digits

Whitespace is ignored. The empty string in markers form is the empty board
of the single composition of 1.
"""

from enum import Enum
from typing import Any, Dict, List, Union

from ..errors import CompositionSemanticError, CompositionSyntaxError
from .compositions import (
    JOIN,
    ColoredComposition,
    MarkerSequence,
    Part,
    ZeroComposition,
    marker_label,
)

Composition = Union[ColoredComposition, ZeroComposition, MarkerSequence]


class CompositionForm(str, Enum):
    COLORED = "colored"
    ZEROS = "zeros"
    MARKERS = "markers"


class _Scanner:
    """Character scanner that remembers its position for error reports"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_whitespace(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self._skip_whitespace()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self._skip_whitespace()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> CompositionSyntaxError:
        return CompositionSyntaxError(message, self.text, self.pos)

    def expect(self, char: str):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def accept(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def number(self) -> int:
        self._skip_whitespace()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected a decimal number, found {found!r}")
        return int(self.text[start:self.pos])

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected {self.text[self.pos]!r}")


def _parse_zeros(scanner: _Scanner) -> List[int]:
    terms = [scanner.number()]
    while scanner.accept("+"):
        terms.append(scanner.number())
    scanner.finish()
    return terms


def _parse_colored(scanner: _Scanner) -> List[Part]:
    parts = []
    while True:
        value = scanner.number()
        scanner.expect("_")
        parts.append(Part(value, scanner.number()))
        if not scanner.accept("+"):
            break
    scanner.finish()
    return parts


def _parse_markers(scanner: _Scanner) -> List[int]:
    if scanner.at_end():
        return []
    markers = []
    while True:
        if scanner.accept("J"):
            markers.append(JOIN)
        elif scanner.accept("S"):
            start = scanner.pos
            m = scanner.number()
            if m == JOIN:
                raise CompositionSemanticError(f"marker S0 at position {start} is not a separator")
            markers.append(m)
        else:
            found = scanner.peek() or "end of input"
            raise scanner.error(f"expected 'J' or 'S', found {found!r}")
        if not scanner.accept(","):
            break
    scanner.finish()
    return markers


def parse(text: str, form: Union[CompositionForm, str], k: int) -> Composition:
    """Parse text in the named form and validate it for the given k

    Raises CompositionSyntaxError for malformed text and
    CompositionSemanticError for text that parses but breaks an invariant.
    """
    form = CompositionForm(form)
    scanner = _Scanner(text)
    if form is CompositionForm.ZEROS:
        return ZeroComposition(k, tuple(_parse_zeros(scanner)))
    if form is CompositionForm.COLORED:
        return ColoredComposition(k, tuple(_parse_colored(scanner)))
    markers = _parse_markers(scanner)
    return MarkerSequence(k, len(markers) + 1, tuple(markers))


def form_of(x: Composition) -> CompositionForm:
    if isinstance(x, ColoredComposition):
        return CompositionForm.COLORED
    if isinstance(x, ZeroComposition):
        return CompositionForm.ZEROS
    if isinstance(x, MarkerSequence):
        return CompositionForm.MARKERS
    raise TypeError(f"not a composition: {type(x).__name__}")


def render(x: Composition) -> str:
    """Canonical text for any composition form"""
    form = form_of(x)
    if form is CompositionForm.COLORED:
        return "+".join(f"{value}_{color}" for value, color in x.parts)
    if form is CompositionForm.ZEROS:
        return "+".join(str(term) for term in x.terms)
    return ",".join(marker_label(marker) for marker in x.markers)


def to_json_dict(x: Composition) -> Dict[str, Any]:
    """JSON-ready dict, e.g. {"k": 2, "form": "zeros", "terms": [2, 0, 1]}"""
    form = form_of(x)
    if form is CompositionForm.COLORED:
        return {"k": x.k, "form": form.value, "parts": [[value, color] for value, color in x.parts]}
    if form is CompositionForm.ZEROS:
        return {"k": x.k, "form": form.value, "terms": list(x.terms)}
    return {"k": x.k, "form": form.value, "n": x.n, "markers": [marker_label(m) for m in x.markers]}


def from_json_dict(data: Dict[str, Any]) -> Composition:
    """Inverse of to_json_dict, with full validation"""
    k = data["k"]
    form = CompositionForm(data["form"])
    if form is CompositionForm.COLORED:
        return ColoredComposition(k, tuple(Part(value, color) for value, color in data["parts"]))
    if form is CompositionForm.ZEROS:
        return ZeroComposition(k, tuple(data["terms"]))
    board = parse(",".join(data["markers"]), form, k)
    if data.get("n", board.n) != board.n:
        raise CompositionSemanticError(f"{len(board.markers)} markers do not fit a board of length {data['n']}")
    return board
