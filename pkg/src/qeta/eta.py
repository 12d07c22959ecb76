"""Expansion of the Euler products f_r = (1-q^r)(1-q^{2r})(1-q^{3r})...

The expansion of f_1 is lacunary: its nonzero coefficients sit exactly at the
generalized pentagonal numbers k(3k-1)/2 (k ranging over all integers) with
value (-1)^k.  Filling those directly costs O(sqrt(N)) instead of the O(N^2)
of multiplying the product out factor by factor; the naive finite product
stays in the test suite as the independent oracle.

f_r for r > 1 is f_1 with q replaced by q^r, so its support is the pentagonal
support scaled by r.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DomainError
from .series import Series

__all__ = ["expand_f", "pentagonal_numbers"]


def pentagonal_numbers(n_max: int) -> Iterator[tuple[int, int]]:
    """Yield (k(3k-1)/2, (-1)^k) for all integers k, in increasing exponent order.

    Enumerates k = 0, 1, -1, 2, -2, ... and stops once both exponents for a
    given |k| exceed n_max.
    """
    if n_max >= 0:
        yield 0, 1
    k = 1
    while True:
        e_pos = k * (3 * k - 1) // 2  # k > 0
        e_neg = k * (3 * k + 1) // 2  # the -k term
        if e_pos > n_max:
            return
        sign = -1 if k % 2 else 1
        yield e_pos, sign
        if e_neg <= n_max:
            yield e_neg, sign
        k += 1


def expand_f(r: int, order: int) -> Series:
    """Truncated expansion of f_r to the given order.

    Coefficients of any single f_r lie in {-1, 0, 1}.
    """
    if r < 1:
        raise DomainError("f subscript must be a positive integer")
    if order < 0:
        raise DomainError("truncation order must be non-negative")
    coeffs = [0] * (order + 1)
    for exponent, sign in pentagonal_numbers(order // r):
        coeffs[r * exponent] = sign
    return Series._wrap(coeffs)
