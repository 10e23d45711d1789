"""
Compositions with parts 1, 1', 2, 3, ..., k (two distinguishable kinds of 1)
"""

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Tuple

from ..core.compositions import check_k, check_n
from ..errors import CompositionSemanticError, DomainError


class BPart(NamedTuple):
    value: int
    primed: bool = False

    @property
    def text(self) -> str:
        """ASCII rendering: 1' is written 1p"""
        return "1p" if self.primed else str(self.value)

    @property
    def json_value(self):
        return "1'" if self.primed else self.value


ONE = BPart(1)
ONE_PRIME = BPart(1, True)


def b_symbols(k: int) -> List[BPart]:
    """Part symbols in enumeration order 1 < 1' < 2 < ... < k"""
    return [ONE, ONE_PRIME] + [BPart(value) for value in range(2, k + 1)]


def _check_b_k(k: int) -> None:
    check_k(k)
    if k < 2:
        raise DomainError(f"B compositions need k >= 2, got {k}")


@dataclass(frozen=True)
class BComposition:
    k: int
    parts: Tuple[BPart, ...]

    def __post_init__(self):
        _check_b_k(self.k)
        parts = tuple(BPart(*part) for part in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise CompositionSemanticError("a B composition needs at least one part")
        for part in parts:
            if not 1 <= part.value <= self.k:
                raise CompositionSemanticError(f"part {part.value} outside 1..{self.k}")
            if part.primed and part.value != 1:
                raise CompositionSemanticError(f"only 1 has a primed copy, got {part.value}'")

    @property
    def n(self) -> int:
        return sum(part.value for part in self.parts)

    @property
    def primed_count(self) -> int:
        return sum(1 for part in self.parts if part.primed)

    def render(self) -> str:
        return "+".join(part.text for part in self.parts)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "form": "b", "parts": [part.json_value for part in self.parts]}


def _b_tuples(symbols: List[BPart], remaining: int) -> Iterator[Tuple[BPart, ...]]:
    if remaining == 0:
        yield ()
        return
    for symbol in symbols:
        if symbol.value <= remaining:
            for rest in _b_tuples(symbols, remaining - symbol.value):
                yield (symbol,) + rest


def enumerate_B(k: int, n: int) -> Iterator[BComposition]:
    """Stream B^k(n) lexicographically with 1 < 1' < 2 < ... < k"""
    _check_b_k(k)
    check_n(n)
    return (BComposition(k, parts) for parts in _b_tuples(b_symbols(k), n))
