"""Non-isomorphic graph catalogues.

``extension_catalogue`` grows order ``n`` from order ``n - 1`` by attaching a
new vertex to every subset of the old ones and keeping one representative per
canonical key. ``bruteforce_catalogue`` runs over all labeled edge sets and is
only practical up to order 6; it serves as the cross-check.
"""

from __future__ import annotations

import functools
from pathlib import Path
from typing import Iterator

from .canon import CANON_LIMIT, canonical_form, canonical_key
from .graph import Graph, bits
from .graph6 import encode_adj, read_graph6_file

GENERATOR_LIMIT = 8


@functools.lru_cache(maxsize=None)
def _extension(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    found: dict[bytes, Graph] = {}
    for g in _extension(n - 1):
        for nb in range(1 << (n - 1)):
            adj = tuple(r | ((nb >> i & 1) << (n - 1)) for i, r in enumerate(g.adj)) + (nb,)
            form, _ = canonical_form(n, adj)
            key = encode_adj(n, form).encode("ascii")
            if key not in found:
                found[key] = Graph(n, form)
    return tuple(found[k] for k in sorted(found))


def extension_catalogue(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class, sorted by key."""
    if not 0 <= n <= GENERATOR_LIMIT:
        raise ValueError(f"internal generator supports 0 <= n <= {GENERATOR_LIMIT}, got {n}")
    return list(_extension(n))


def bruteforce_catalogue(n: int) -> list[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    found: dict[bytes, Graph] = {}
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        form, _ = canonical_form(n, tuple(adj))
        found.setdefault(bytes(repr(form), "ascii"), Graph(n, form))
    return sorted(found.values(), key=canonical_key)


def graph_catalogue(n: int, source: str | Path | None = None) -> Iterator[Graph]:
    """Graphs of order ``n``: internal generator, or the order-``n`` records of a graph6 file.

    File input is deduplicated by canonical key; malformed lines raise
    ``Graph6Error`` carrying the line number.
    """
    if source is None:
        yield from extension_catalogue(n)
        return
    seen: set[bytes] = set()
    for g in read_graph6_file(source):
        if g.n != n:
            continue
        k = canonical_key(g)
        if k not in seen:
            seen.add(k)
            yield g


@functools.lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    found: dict[bytes, Graph] = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            adj = list(t.adj) + [1 << v]
            adj[v] |= 1 << (n - 1)
            form, _ = canonical_form(n, tuple(adj))
            key = encode_adj(n, form).encode("ascii")
            if key not in found:
                found[key] = Graph(n, form)
    return tuple(found[k] for k in sorted(found))


def tree_catalogue(n: int) -> list[Graph]:
    """Non-isomorphic trees of order ``n``, grown leaf by leaf."""
    if not 1 <= n <= CANON_LIMIT:
        raise ValueError(f"tree catalogue supports 1 <= n <= {CANON_LIMIT}, got {n}")
    return list(_trees(n))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1
