"""Canonical labeling for small graphs.

Color refinement splits vertices by degree, then by the multiset of neighbour
colors, until stable. Remaining ties are broken by individualizing each vertex
of the first non-singleton cell in turn and refining again. Every leaf of that
search is a relabeling of the graph; the smallest one is canonical.

Two prunings keep symmetric graphs cheap: twins (vertices with the same
neighbourhood apart from each other) in the target cell are tried once, and
automorphisms discovered from equal leaves prune candidates in the same orbit.
"""

from __future__ import annotations

from .graph import Graph, bits

CANON_LIMIT = 12


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in bits(adj[v])))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == ncells:
            return new
        colors, ncells = new, len(order)


def _relabeled(n: int, adj: tuple[int, ...], pos: list[int]) -> tuple[int, ...]:
    out = [0] * n
    for v in range(n):
        row = 0
        for w in bits(adj[v]):
            row |= 1 << pos[w]
        out[pos[v]] = row
    return tuple(out)


def _orbit_roots(n: int, gens: list[list[int]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[v] == v for v in fixed):
            for v in range(n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[a] = b
    return [find(v) for v in range(n)]


def canonical_form(n: int, adj: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(canonical adjacency, position of each vertex)``."""
    if n <= 1:
        return tuple(adj), list(range(n))
    degs = [bin(r).count("1") for r in adj]
    best: list = [None, None]
    leaves: dict[tuple[int, ...], list[int]] = {}
    gens: list[list[int]] = []

    def search(colors: list[int], prefix: list[int]) -> None:
        colors = _refine(n, adj, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == n:
            form = _relabeled(n, adj, colors)
            seen = leaves.get(form)
            if seen is None:
                leaves[form] = colors
                if best[0] is None or form < best[0]:
                    best[0], best[1] = form, colors
            else:
                # seen^-1 o colors is an automorphism
                inv = [0] * n
                for v, p in enumerate(seen):
                    inv[p] = v
                gens.append([inv[colors[v]] for v in range(n)])
            return
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        twin_seen: list[int] = []
        for v in cell:
            nb = adj[v]
            if any((adj[u] & ~(1 << v)) == (nb & ~(1 << u)) for u in twin_seen):
                continue
            if tried:
                roots = _orbit_roots(n, gens, prefix)
                if any(roots[u] == roots[v] for u in tried):
                    continue
            tried.append(v)
            twin_seen.append(v)
            search([2 * c + (c == target and w != v) for w, c in enumerate(colors)],
                   prefix + [v])

    search(degs, [])
    return best[0], best[1]


def _pack(n: int, adj: tuple[int, ...]) -> bytes:
    from .graph6 import encode_adj

    return encode_adj(n, adj).encode("ascii")


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 bytes of the canonical relabeling."""
    if g.n > CANON_LIMIT:
        raise ValueError(f"canonical labeling supported up to order {CANON_LIMIT}, got {g.n}")
    form, _ = canonical_form(g.n, g.adj)
    return _pack(g.n, form)


def canonical_graph(g: Graph) -> Graph:
    form, _ = canonical_form(g.n, g.adj)
    return Graph(g.n, form)


def memo_key(n: int, adj: tuple[int, ...]) -> bytes:
    """Canonical key up to ``CANON_LIMIT``, labeled adjacency above it."""
    if n <= CANON_LIMIT:
        return _pack(n, canonical_form(n, adj)[0])
    return _pack(n, adj)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_key(g) == canonical_key(h)
