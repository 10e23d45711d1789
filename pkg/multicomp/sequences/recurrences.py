"""
k-Jacobsthal and k-Pell sequences, and the two printed summation formulas
"""

from math import comb

from ..core.compositions import check_k
from ..counting.multinomial import multinomial
from ..errors import DomainError


def _check_pell_k(k: int) -> None:
    check_k(k)
    if k < 2:
        raise DomainError(f"the k-Pell sequence needs k >= 2, got {k}")


def _binomial(top: int, bottom: int) -> int:
    """binomial(top, bottom), zero whenever either index is out of range"""
    if top < 0 or bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def jacobsthal_k(k: int, n: int) -> int:
    """J(0) = 0, J(1) = 1, J(n) = J(n-1) + k J(n-2); k = 1 gives Fibonacci"""
    check_k(k)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    previous, current = 0, 1
    if n == 0:
        return 0
    for _ in range(n - 1):
        previous, current = current, current + k * previous
    return current


def pell_k(k: int, n: int) -> int:
    """P(n) = 2P(n-1) + P(n-2) + ... + P(n-k), P(1) = 1 and P(n) = 0 for n <= 0"""
    _check_pell_k(k)
    if n <= 0:
        return 0
    window = [0] * (k - 1) + [1]  # P(2-k) .. P(1)
    for _ in range(n - 1):
        window = window[1:] + [2 * window[-1] + sum(window[:-1])]
    return window[-1]


def jacobsthal_printed_formula(k: int, n: int) -> int:
    """sum_{i>=1} k^(i-1) binomial(n-1-i, i-1), evaluated as printed"""
    check_k(k)
    return sum(k ** (i - 1) * _binomial(n - 1 - i, i - 1) for i in range(1, n + 1))


def pell_printed_formula(k: int, n: int) -> int:
    """sum_{i>=0} sum_{m=0}^{n-i} binomial(n-i, m) multinomial(m, i, k-1), evaluated as printed"""
    _check_pell_k(k)
    return sum(
        _binomial(n - i, m) * multinomial(m, i, k - 1)
        for i in range(n + 1)
        for m in range(n - i + 1)
    )
