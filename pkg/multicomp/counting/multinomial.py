"""
Multinomial coefficients and closed-form counts of k-compositions by parts
"""

import threading
from math import comb
from typing import Dict, List, Tuple

from ..core.compositions import check_k, check_n
from ..errors import DomainError

_rows: Dict[int, List[Tuple[int, ...]]] = {}
_rows_lock = threading.Lock()


def _multiply_by_block(row: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    """Multiply a coefficient row by 1 + x + ... + x^k (sliding window sum)"""
    result = []
    window = 0
    for index in range(len(row) + k):
        if index < len(row):
            window += row[index]
        if index - k - 1 >= 0:
            window -= row[index - k - 1]
        result.append(window)
    return tuple(result)


def multinomial_row(n: int, k: int) -> Tuple[int, ...]:
    """Coefficients of (1 + x + ... + x^k)^n, from x^0 to x^(nk)

    k = 0 is accepted (the constant polynomial 1) so that the zero-count
    formula can use k - 1 when k = 1.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    with _rows_lock:
        rows = _rows.setdefault(k, [(1,)])
        while len(rows) <= n:
            rows.append(_multiply_by_block(rows[-1], k))
        return rows[n]


def multinomial(n: int, l: int, k: int) -> int:
    """[x^l](1 + x + ... + x^k)^n; zero outside 0 <= l <= nk"""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if l < 0 or l > n * k:
        return 0
    return multinomial_row(n, k)[l]


def count_total(k: int, n: int) -> int:
    """Number of k-compositions of n"""
    check_k(k)
    check_n(n)
    return (k + 1) ** (n - 1)


def count_all_parts(k: int, n: int, l: int) -> int:
    """k-compositions of n with l parts (zeros included)"""
    check_k(k)
    check_n(n)
    if not 1 <= l <= n * k - k + 1:
        return 0
    return multinomial(n - 1, l - 1, k)


def count_positive_parts(k: int, n: int, l: int) -> int:
    """k-compositions of n with l positive parts"""
    check_k(k)
    check_n(n)
    if not 1 <= l <= n:
        return 0
    return k ** (l - 1) * comb(n - 1, l - 1)


def count_zeros(k: int, n: int, l: int) -> int:
    """k-compositions of n with l zeros"""
    check_k(k)
    check_n(n)
    if not 0 <= l <= (n - 1) * (k - 1):
        return 0
    return sum(comb(n - 1, m) * multinomial(m, l, k - 1) for m in range(n))
