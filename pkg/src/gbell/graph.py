"""Simple undirected graphs stored as per-vertex adjacency bitmasks.

Graphs are immutable values. Every rewrite returns a new graph. Bit ``j`` of
``adj[i]`` is set iff ``{i, j}`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def squeeze(mask: int, w: int) -> int:
    """Drop bit ``w`` and shift every higher bit down by one."""
    return (mask & ((1 << w) - 1)) | ((mask >> (w + 1)) << w)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond the order")
            if row >> i & 1:
                raise ValueError(f"self-loop at {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at {{{i}, {j}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if not self.adj[i] >> j & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(r | (1 << i) == full for i, r in enumerate(self.adj))

    def __str__(self) -> str:
        return format_edges(self)


# -- edge-list literal "n; u-v,u-v" -------------------------------------------

def parse_edges(text: str) -> Graph:
    """Parse the ``"n; u-v,u-v,..."`` literal used in tests and on the CLI."""
    head, _, tail = text.partition(";")
    try:
        n = int(head.strip())
        edges = []
        for item in tail.split(","):
            item = item.strip()
            if not item:
                continue
            u, v = item.split("-")
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ValueError(f"malformed edge literal {text!r}") from exc
    return Graph.from_edges(n, edges)


def format_edges(g: Graph) -> str:
    return f"{g.n}; " + ",".join(f"{u}-{v}" for u, v in g.edges())


# -- named families -----------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts are ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(r: int) -> Graph:
    """``K_{1,r}`` with center 0; ``star(0)`` is ``K_1``."""
    return complete_bipartite(1, r)


def q_graph(n: int) -> Graph:
    """The path ``0-1-...-(n-1)`` plus the chord ``{0, 2}``."""
    if n < 3:
        raise ValueError(f"Q_n needs n >= 3, got {n}")
    return add_edge(path(n), 0, 2)


FAMILIES = {
    "complete": (complete, 1),
    "empty": (Graph.empty, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "q": (q_graph, 1),
    "path-complement": (lambda n: complement(path(n)), 1),
    "cycle-complement": (lambda n: complement(cycle(n)), 1),
}


def make_family(family: str, params: Sequence[int]) -> Graph:
    """Build a named graph family member with its documented labeling."""
    key = family.lower()
    if key not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    build, arity = FAMILIES[key]
    params = list(params)
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    if any(p < 1 for p in params):
        raise ValueError(f"family parameters must be positive, got {params}")
    return build(*params)


# -- rewrites -----------------------------------------------------------------

def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u, v)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {u}-{v} absent")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u, v)
    if u == v:
        raise ValueError("cannot add a self-loop")
    if g.has_edge(u, v):
        raise ValueError(f"edge {u}-{v} already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def contract_adj(n: int, adj: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Merge ``u`` and ``v`` into ``min(u, v)``; higher labels shift down."""
    if u > v:
        u, v = v, u
    merged = (adj[u] | adj[v]) & ~((1 << u) | (1 << v))
    out = []
    for i in range(n):
        if i == v:
            continue
        if i == u:
            row = merged
        else:
            row = adj[i]
            if row >> v & 1:
                row |= 1 << u
        out.append(squeeze(row, v))
    return tuple(out)


def contract(g: Graph, u: int, v: int) -> Graph:
    """Identify ``u`` and ``v``. The merged vertex keeps label ``min(u, v)``."""
    _check_vertex(g, u, v)
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    return Graph(g.n - 1, contract_adj(g.n, g.adj, u, v))


def remove_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return Graph(g.n - 1, tuple(squeeze(r, v) for i, r in enumerate(g.adj) if i != v))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled in increasing order."""
    vs = sorted(set(vertices))
    _check_vertex(g, *vs)
    pos = {v: i for i, v in enumerate(vs)}
    adj = []
    for v in vs:
        row = 0
        for w in bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(vs), tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps labels ``0..g.n-1``; ``h`` is shifted up by ``g.n``."""
    return Graph(g.n + h.n, g.adj + tuple(r << g.n for r in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    return Graph(g.n + h.n, tuple(r | hmask for r in g.adj)
                 + tuple((r << g.n) | gmask for r in h.adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.adj)))


def add_isolated(g: Graph, p: int) -> Graph:
    if p < 0:
        raise ValueError("number of isolated vertices must be >= 0")
    return Graph(g.n + p, g.adj + (0,) * p)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of the vertices")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        new = 0
        for w in bits(row):
            new |= 1 << perm[w]
        adj[perm[v]] = new
    return Graph(g.n, tuple(adj))


# -- structure ----------------------------------------------------------------

def max_degree(g: Graph) -> int:
    return max((popcount(r) for r in g.adj), default=0)


def is_simplicial(g: Graph, v: int) -> bool:
    _check_vertex(g, v)
    nb = g.adj[v]
    return all((g.adj[w] | (1 << w)) & nb == nb for w in bits(nb))


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_simplicial(g, v)]


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or ``None`` if ``g`` is not chordal.

    Maximum cardinality search numbers vertices from last to first; the
    reverse of the visit order is then checked directly.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    visit = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        visit.append(v)
        visited |= 1 << v
        for w in bits(g.adj[v] & ~visited):
            weight[w] += 1
    order = visit[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        # the earliest later neighbour must see all the others
        parent = min(later, key=pos.__getitem__)
        rest = 0
        for w in later:
            if w != parent:
                rest |= 1 << w
        if rest & ~g.adj[parent]:
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def max_clique_chordal(g: Graph) -> list[int]:
    """A maximum clique of a chordal graph, read off its elimination order."""
    order = perfect_elimination_order(g)
    if order is None:
        raise ValueError("graph is not chordal")
    pos = {v: i for i, v in enumerate(order)}
    best: list[int] = []
    for v in order:
        cl = [v] + [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        if len(cl) > len(best):
            best = cl
    return sorted(best)


def chromatic_number(g: Graph) -> int:
    """Smallest ``k`` with a proper ``k``-coloring.

    Edgeless and bipartite graphs are answered directly; everything else reads
    the first nonzero entry of the color-count vector.
    """
    if g.n == 0:
        raise ValueError("chromatic number undefined for the order-0 graph")
    if g.m == 0:
        return 1
    if is_bipartite(g):
        return 2
    from .engine import s_vector

    return next(k for k, s in enumerate(s_vector(g), start=1) if s)
