"""Closed-form values of ``A(G)`` for named families and the lower bounds.

Everything is exact. The ``check_*`` helpers compare two sides of an
S-vector identity computed by the engine and return a ``Mismatch`` report;
the report is truthy iff the identity holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .engine import Engine, default_engine
from .graph import Graph, add_isolated, cycle, q_graph
from .numbers import bell, binomial, factorial, fibonacci, lucas, stirling2


def _ratio(num: int, den: int) -> Fraction:
    assert num > 0 and den > 0, (num, den)
    return Fraction(num, den)


def a_empty(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _ratio(bell(n + 1) - bell(n), bell(n))


def a_tree_plus_isolated(n: int, p: int) -> Fraction:
    """``A(T u pK1)`` for any tree ``T`` of order ``n``."""
    if n < 1 or p < 0:
        raise ValueError(f"need n >= 1 and p >= 0, got n={n}, p={p}")
    num = sum(binomial(p, i) * bell(n + i) for i in range(p + 1))
    den = sum(binomial(p, i) * bell(n + i - 1) for i in range(p + 1))
    return _ratio(num, den)


def a_cycle_plus_isolated(n: int, p: int) -> Fraction:
    if n < 3 or p < 0:
        raise ValueError(f"need n >= 3 and p >= 0, got n={n}, p={p}")
    num = den = 0
    for j in range(1, n):
        sign = 1 if j % 2 else -1
        num += sign * sum(binomial(p, i) * bell(n + i - j + 1) for i in range(p + 1))
        den += sign * sum(binomial(p, i) * bell(n + i - j) for i in range(p + 1))
    return _ratio(num, den)


def s_clique_plus_isolated(n: int, p: int, k: int) -> int:
    """``S(K_n u pK1, k)`` for ``n <= k <= n + p``."""
    if n < 1 or p < 0:
        raise ValueError(f"need n >= 1 and p >= 0, got n={n}, p={p}")
    if not n <= k <= n + p:
        raise ValueError(f"k={k} outside [{n}, {n + p}]")
    return sum(binomial(k - j, n - j) * binomial(n, j) * factorial(n - j) * stirling2(p, k - j)
               for j in range(n + 1) if k - j >= 0)


def a_clique_plus_isolated(n: int, p: int) -> Fraction:
    s = [s_clique_plus_isolated(n, p, k) for k in range(n, n + p + 1)]
    return _ratio(sum(k * x for k, x in zip(range(n, n + p + 1), s)), sum(s))


def s_union(s1: Sequence[int], s2: Sequence[int]) -> tuple[int, ...]:
    """S-vector of a disjoint union from the operands' S-vectors alone."""
    n1, n2 = len(s1), len(s2)

    def at(s, k):
        return s[k - 1] if 1 <= k <= len(s) else 0

    out = []
    for k in range(1, n1 + n2 + 1):
        total = 0
        for i in range(1, min(k, n1) + 1):
            si = s1[i - 1]
            if not si:
                continue
            for j in range(i + 1):
                total += (binomial(i, j) * binomial(k - j, i - j) * factorial(i - j)
                          * si * at(s2, k - j))
        out.append(total)
    return tuple(out)


def b_path_complement(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return fibonacci(n + 1)


def a_path_complement(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _ratio((n + 1) * fibonacci(n + 2) + (2 * n - 1) * fibonacci(n + 1), 5 * fibonacci(n + 1))


def b_cycle_complement(n: int) -> int:
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return lucas(n)


def a_cycle_complement(n: int) -> Fraction:
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    return _ratio(n * fibonacci(n + 1), lucas(n))


# -- lower bounds ---------------------------------------------------------------

def _check_bound_args(n: int, r: int) -> None:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")


def bound_l1(n: int) -> Fraction:
    """``A(E_n)``."""
    return a_empty(n)


def bound_l2(n: int, r: int) -> Fraction:
    """``A(K_r u (n-r)K1)``."""
    _check_bound_args(n, r)
    return a_clique_plus_isolated(r, n - r)


def bound_l3(n: int, r: int) -> Fraction:
    """``A(K_{1,r-1} u (n-r)K1)``."""
    _check_bound_args(n, r)
    p = n - r
    num = sum(binomial(p, i) * bell(r + i) for i in range(p + 1))
    den = sum(binomial(p, i) * bell(r + i - 1) for i in range(p + 1))
    return _ratio(num, den)


@dataclass(frozen=True)
class BoundTriple:
    n: int
    r: int
    l1: Fraction
    l2: Fraction
    l3: Fraction


def bounds(n: int, r: int) -> BoundTriple:
    return BoundTriple(n, r, bound_l1(n), bound_l2(n, r), bound_l3(n, r))


# -- S-vector identities ----------------------------------------------------------

@dataclass
class Mismatch:
    """Outcome of an identity check; ``k`` is the first failing color count."""

    name: str
    holds: bool
    k: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def _pad(s: Sequence[int], n: int) -> list[int]:
    return list(s) + [0] * (n - len(s))


def compare_vectors(name: str, lhs: Sequence[int], rhs: Sequence[int]) -> Mismatch:
    n = max(len(lhs), len(rhs))
    a, b = _pad(lhs, n), _pad(rhs, n)
    for k in range(n):
        if a[k] != b[k]:
            return Mismatch(name, False, k + 1, a[k], b[k])
    return Mismatch(name, True)


def _add(acc: list[int], s: Sequence[int], coef: int = 1) -> list[int]:
    n = max(len(acc), len(s))
    acc = _pad(acc, n)
    for i, x in enumerate(s):
        acc[i] += coef * x
    return acc


def _sq(n: int, p: int, eng: Engine) -> tuple[int, ...]:
    return eng.s_vector(add_isolated(q_graph(n), p))


def check_q_shift_identity(n: int, p: int, x: int, engine: Engine | None = None) -> Mismatch:
    """``S(Q_n u pK1) = sum_i C(x, i) S(Q_{n+i} u (p-x)K1)``."""
    if n < 3 or not 0 <= x <= p:
        raise ValueError(f"need n >= 3 and 0 <= x <= p, got n={n}, p={p}, x={x}")
    eng = engine or default_engine()
    rhs: list[int] = []
    for i in range(x + 1):
        rhs = _add(rhs, _sq(n + i, p - x, eng), binomial(x, i))
    return compare_vectors(f"q-shift(n={n}, p={p}, x={x})", _sq(n, p, eng), rhs)


def check_odd_cycle_decomposition(n: int, p: int, engine: Engine | None = None) -> Mismatch:
    """``S(C_n u pK1) = sum_{i=0}^{(n-3)/2} S(Q_{2i+3} u pK1)`` for odd ``n``."""
    if n < 3 or n % 2 == 0 or p < 0:
        raise ValueError(f"need odd n >= 3 and p >= 0, got n={n}, p={p}")
    eng = engine or default_engine()
    rhs: list[int] = []
    for i in range((n - 3) // 2 + 1):
        rhs = _add(rhs, _sq(2 * i + 3, p, eng))
    lhs = eng.s_vector(add_isolated(cycle(n), p))
    return compare_vectors(f"odd-cycle(n={n}, p={p})", lhs, rhs)


def c3_alpha(x: int, i: int) -> int:
    """Coefficient of ``S(Q_{i+3} u (n-x)K1)`` in the C3 expansion."""
    return binomial(x - 3, i) - (1 if i % 2 == 0 else 0)


def check_c3_expansion(n: int, x: int, engine: Engine | None = None) -> Mismatch:
    """``S(C_3 u (n-3)K1) = S(C_x u (n-x)K1) + sum_{i=0}^{x-5} c3_alpha(x, i+1) S(Q_{i+4} u (n-x)K1)``.

    The coefficient of ``Q_{i+4}`` is ``c3_alpha(x, i + 1)``; the alpha values
    at the two ends of the range vanish, which is why they do not appear.
    """
    if x < 5 or x % 2 == 0 or x > n:
        raise ValueError(f"need odd x with 5 <= x <= n, got n={n}, x={x}")
    eng = engine or default_engine()
    rhs = list(eng.s_vector(add_isolated(cycle(x), n - x)))
    notes = []
    for i in range(x - 4):
        alpha = c3_alpha(x, i + 1)
        if alpha < 0:
            return Mismatch(f"c3-expansion(n={n}, x={x})", False, notes=[f"alpha_{i + 1} = {alpha} < 0"])
        rhs = _add(rhs, _sq(i + 4, n - x, eng), alpha)
    for i in (0, x - 3):
        if c3_alpha(x, i):
            notes.append(f"boundary alpha_{i} = {c3_alpha(x, i)} != 0")
    lhs = eng.s_vector(add_isolated(cycle(3), n - 3))
    out = compare_vectors(f"c3-expansion(n={n}, x={x})", lhs, rhs)
    if notes:
        out.holds = False
        out.notes += notes
    return out
