"""Exact integer sequences: Bell, 2-Bell, Stirling, Fibonacci, Lucas.

Values are grown lazily into module-level tables guarded by a lock, so they
are safe to share between threads. Rationals are ``fractions.Fraction``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

_lock = threading.Lock()
_bell_rows: list[list[int]] = [[1]]      # Bell triangle, row r starts with B_r
_stirling: list[list[int]] = [[1]]       # _stirling[n][k] = {n, k}
_fib: list[int] = [0, 1, 1]


def _check(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def bell(n: int) -> int:
    """Number of partitions of an ``n``-set, from the Bell triangle."""
    _check(n)
    with _lock:
        while len(_bell_rows) <= n:
            prev = _bell_rows[-1]
            row = [prev[-1]]
            for x in prev:
                row.append(row[-1] + x)
            _bell_rows.append(row)
        return _bell_rows[n][0]


def stirling2(n: int, k: int) -> int:
    """Partitions of an ``n``-set into exactly ``k`` blocks."""
    _check(n)
    _check(k, "k")
    if k > n:
        return 0
    with _lock:
        while len(_stirling) <= n:
            prev = _stirling[-1]
            m = len(_stirling)
            row = [0] * (m + 1)
            for j in range(1, m + 1):
                row[j] = j * (prev[j] if j < len(prev) else 0) + prev[j - 1]
            _stirling.append(row)
        return _stirling[n][k]


def two_bell(n: int) -> int:
    """Total number of blocks over all partitions of an ``n``-set."""
    return sum(k * stirling2(n, k) for k in range(n + 1))


def fibonacci(n: int) -> int:
    """``F_0 = 0``, ``F_1 = F_2 = 1``."""
    _check(n)
    with _lock:
        while len(_fib) <= n:
            _fib.append(_fib[-1] + _fib[-2])
        return _fib[n]


def lucas(n: int) -> int:
    """``L_0 = 2``, ``L_1 = 1``, ``L_2 = 3``."""
    _check(n)
    if n == 0:
        return 2
    return fibonacci(n - 1) + fibonacci(n + 1)


def binomial(n: int, k: int) -> int:
    _check(n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    _check(n)
    return math.factorial(n)


def average_blocks(n: int) -> Fraction:
    """Average block count of a random partition of an ``n``-set."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value = Fraction(bell(n + 1) - bell(n), bell(n))
    assert value == Fraction(two_bell(n), bell(n))
    return value
