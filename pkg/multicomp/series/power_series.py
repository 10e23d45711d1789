"""
Truncated formal power series with exact rational coefficients

A series carries its order (the number of known coefficients, from x^0);
mixed-order arithmetic truncates to the smaller order.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, TypeVar, Union

from ..errors import SeriesError

T = TypeVar("T")
Scalar = Union[int, Fraction]


def log_recurrence(a: Sequence[T]) -> List[T]:
    """Coefficients b_1..b_{N-1} of log(a) for a series a with a_0 = 1

    Works over any ring whose elements support +, -, *, int * x and
    Fraction * x; a_0 itself is never read, the caller checks it is 1.
    Uses n b_n = n a_n - sum_{m=1}^{n-1} m b_m a_{n-m}, i.e. a L' = a'.
    """
    b: List[T] = []
    for n in range(1, len(a)):
        correction = None
        for m in range(1, n):
            term = (m * b[m - 1]) * a[n - m]
            correction = term if correction is None else correction + term
        value = a[n]
        if correction is not None:
            value = value - Fraction(1, n) * correction
        b.append(value)
    return b


@dataclass(frozen=True)
class PowerSeries:
    """c_0 + c_1 x + ... + c_{order-1} x^(order-1) + O(x^order)"""
    coefficients: tuple

    def __post_init__(self):
        coefficients = tuple(Fraction(c) for c in self.coefficients)
        if not coefficients:
            raise SeriesError("a power series needs order >= 1")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def of(cls, values: Iterable[Scalar], order: int) -> "PowerSeries":
        """Series from leading coefficients, zero-padded or truncated to order"""
        if order < 1:
            raise SeriesError(f"order must be positive, got {order}")
        values = list(values)[:order]
        return cls(tuple(values) + (0,) * (order - len(values)))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to {order}")
        return PowerSeries(self.coefficients[:order])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_integers(self) -> List[int]:
        if not self.is_integral():
            raise SeriesError("series has non-integer coefficients")
        return [c.numerator for c in self.coefficients]

    # Arithmetic

    def _paired(self, other: "PowerSeries"):
        order = min(self.order, other.order)
        return order, self.coefficients[:order], other.coefficients[:order]

    def __add__(self, other):
        if isinstance(other, Rational):
            return PowerSeries((self[0] + other,) + self.coefficients[1:])
        if not isinstance(other, PowerSeries):
            return NotImplemented
        _, a, b = self._paired(other)
        return PowerSeries(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, (Rational, PowerSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Rational):
            return PowerSeries(tuple(c * other for c in self.coefficients))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise SeriesError("division of a series by zero")
            return PowerSeries(tuple(c / other for c in self.coefficients))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return divide(self, other)

    def derivative(self) -> "PowerSeries":
        """d/dx; known to one order less"""
        if self.order < 2:
            raise SeriesError("the derivative of an order-1 series is unknown")
        return PowerSeries(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def reciprocal(self) -> "PowerSeries":
        return divide(PowerSeries.of([1], self.order), self)

    def log(self) -> "PowerSeries":
        return log(self)

    def exp(self) -> "PowerSeries":
        return exp(self)


def multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order"""
    order = min(a.order, b.order)
    product = [Fraction(0)] * order
    for i, x in enumerate(a.coefficients[:order]):
        if x:
            for j in range(order - i):
                product[i + j] += x * b.coefficients[j]
    return PowerSeries(tuple(product))


def _solve(numerator: Sequence[Fraction], denominator: Sequence[Fraction], order: int) -> PowerSeries:
    """The series s with denominator * s = numerator to the given order"""
    if denominator[0] == 0:
        raise SeriesError("denominator has zero constant term")
    lead = Fraction(denominator[0])
    s: List[Fraction] = []
    for n in range(order):
        value = Fraction(numerator[n]) if n < len(numerator) else Fraction(0)
        for i in range(1, min(n, len(denominator) - 1) + 1):
            value -= denominator[i] * s[n - i]
        s.append(value / lead)
    return PowerSeries(tuple(s))


def divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """a / b for b with nonzero constant term"""
    order = min(a.order, b.order)
    return _solve(a.coefficients[:order], b.coefficients[:order], order)


def expand_rational(numerator: Sequence[int], denominator: Sequence[int], order: int) -> PowerSeries:
    """Expand numerator / denominator (integer polynomial coefficient lists) to order"""
    if order < 1:
        raise SeriesError(f"order must be positive, got {order}")
    if not denominator or denominator[0] == 0:
        raise SeriesError("denominator has zero constant term")
    return _solve([Fraction(c) for c in numerator], [Fraction(c) for c in denominator], order)


def log(a: PowerSeries) -> PowerSeries:
    """Formal logarithm of a series with constant term 1"""
    if a[0] != 1:
        raise SeriesError(f"log needs constant term 1, got {a[0]}")
    return PowerSeries((Fraction(0),) + tuple(log_recurrence(a.coefficients)))


def exp(a: PowerSeries) -> PowerSeries:
    """Formal exponential of a series with constant term 0"""
    if a[0] != 0:
        raise SeriesError(f"exp needs constant term 0, got {a[0]}")
    # n e_n = sum_{m=1}^{n} m a_m e_{n-m}
    e = [Fraction(1)]
    for n in range(1, a.order):
        e.append(sum((m * a[m] * e[n - m] for m in range(1, n + 1)), Fraction(0)) / n)
    return PowerSeries(tuple(e))
