"""Color-count vectors ``S(G, k)`` and the quantities derived from them.

``s_vector`` runs the addition/contraction recurrence
``S(G, k) = S(G + uv, k) + S(G | uv, k)`` on a non-adjacent pair until every
branch reaches a clique. Subresults are memoized on canonical keys.

``oracle_s_vector`` and ``refined_counts`` enumerate stable partitions
directly and share no code with the recurrence.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Iterator

from .canon import memo_key
from .graph import Graph, contract_adj, popcount

DEFAULT_ENGINE_LIMIT = 20
ORACLE_LIMIT = 11


class EngineLimitError(ValueError):
    """The graph is too large for the requested computation."""


def engine_limit() -> int:
    env = os.environ.get("GBELL_ENGINE_LIMIT")
    return int(env) if env else DEFAULT_ENGINE_LIMIT


def _pivot(n: int, adj: tuple[int, ...]) -> tuple[int, int] | None:
    """Non-adjacent pair with most common neighbours, lexicographically first."""
    best = None
    best_common = -1
    for u in range(n):
        au = adj[u]
        free = ~au & ~((1 << (u + 1)) - 1) & ((1 << n) - 1)
        while free:
            low = free & -free
            v = low.bit_length() - 1
            free ^= low
            c = popcount(au & adj[v])
            if c > best_common:
                best, best_common = (u, v), c
    return best


class Engine:
    """Deletion-contraction evaluator with its own memo table.

    One instance per worker; the cache only ever gains entries and values are
    immutable tuples, so it may also be shared if duplicated work is fine.
    """

    def __init__(self, limit: int | None = None, memo: bool = True):
        self.limit = engine_limit() if limit is None else limit
        self.memo = memo
        self.cache: dict[bytes, tuple[int, ...]] = {}
        self._labeled: dict[tuple[int, tuple[int, ...]], tuple[int, ...]] = {}
        self.calls = 0

    def clear(self) -> None:
        self.cache.clear()
        self._labeled.clear()

    def s_vector(self, g: Graph) -> tuple[int, ...]:
        """``(S(G,1), ..., S(G,n))``."""
        if g.n == 0:
            raise ValueError("S-vector undefined for the order-0 graph")
        if g.n > self.limit:
            raise EngineLimitError(f"order {g.n} exceeds engine limit {self.limit}")
        return self._s(g.n, g.adj)

    def _s(self, n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
        self.calls += 1
        pair = _pivot(n, adj)
        if pair is None:
            return (0,) * (n - 1) + (1,)
        if self.memo:
            hit = self._labeled.get((n, adj))
            if hit is not None:
                return hit
            key = memo_key(n, adj)
            hit = self.cache.get(key)
            if hit is not None:
                self._labeled[(n, adj)] = hit
                return hit
        u, v = pair
        added = list(adj)
        added[u] |= 1 << v
        added[v] |= 1 << u
        plus = self._s(n, tuple(added))
        merged = self._s(n - 1, contract_adj(n, adj, u, v))
        result = tuple(plus[i] + merged[i] for i in range(n - 1)) + (plus[n - 1],)
        if self.memo:
            self.cache[key] = result
            self._labeled[(n, adj)] = result
        return result

    def bt_of(self, g: Graph) -> tuple[int, int]:
        s = self.s_vector(g)
        return sum(s), sum(k * x for k, x in enumerate(s, start=1))

    def average_colors(self, g: Graph) -> Fraction:
        b, t = self.bt_of(g)
        return Fraction(t, b)


_default = Engine()


def default_engine() -> Engine:
    return _default


def s_vector(g: Graph) -> tuple[int, ...]:
    return _default.s_vector(g)


def bt_of(g: Graph) -> tuple[int, int]:
    """``(B(G), T(G))``: stable partitions and their total block count."""
    return _default.bt_of(g)


def average_colors(g: Graph) -> Fraction:
    """``T(G) / B(G)`` in lowest terms."""
    return _default.average_colors(g)


def s_vector_deletion(g: Graph, u: int, v: int, engine: Engine | None = None) -> tuple[int, ...]:
    """``S(G - uv, k) - S(G | uv, k)`` for an edge ``uv``; equals ``S(G, k)``."""
    from .graph import contract, delete_edge

    eng = engine or _default
    minus = eng.s_vector(delete_edge(g, u, v))
    merged = eng.s_vector(contract(g, u, v)) + (0,)
    return tuple(a - b for a, b in zip(minus, merged))


# -- brute force ---------------------------------------------------------------

def stable_partitions(g: Graph) -> Iterator[list[int]]:
    """Yield every partition of ``V(G)`` into stable sets as block bitmasks.

    Vertices are placed in order, each into an earlier block or a new one
    (restricted growth strings); a branch is cut as soon as a block stops
    being stable.
    """
    n, adj = g.n, g.adj
    blocks: list[int] = []

    def place(v: int) -> Iterator[list[int]]:
        if v == n:
            yield list(blocks)
            return
        for i, b in enumerate(blocks):
            if not b & adj[v]:
                blocks[i] = b | (1 << v)
                yield from place(v + 1)
                blocks[i] = b
        blocks.append(1 << v)
        yield from place(v + 1)
        blocks.pop()

    yield from place(0)


def oracle_s_vector(g: Graph) -> tuple[int, ...]:
    """``S(G, k)`` by direct enumeration of stable partitions."""
    if g.n == 0:
        raise ValueError("S-vector undefined for the order-0 graph")
    if g.n > ORACLE_LIMIT:
        raise EngineLimitError(f"order {g.n} exceeds enumeration bound {ORACLE_LIMIT}")
    counts = [0] * g.n
    for blocks in stable_partitions(g):
        counts[len(blocks) - 1] += 1
    return tuple(counts)


def refined_counts(g: Graph, w: Iterable[int]) -> dict[tuple[int, int], int]:
    """``{(k, i): S_{W,i}(G, k)}``: partitions into ``k`` stable blocks of
    which exactly ``i`` meet ``W``. Zero entries are omitted."""
    if g.n > ORACLE_LIMIT:
        raise EngineLimitError(f"order {g.n} exceeds enumeration bound {ORACLE_LIMIT}")
    wmask = 0
    for v in w:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
        wmask |= 1 << v
    out: dict[tuple[int, int], int] = {}
    for blocks in stable_partitions(g):
        key = (len(blocks), sum(1 for b in blocks if b & wmask))
        out[key] = out.get(key, 0) + 1
    return out
