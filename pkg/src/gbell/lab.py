"""Exhaustive checks of the lower-bound conjectures and the inequality theorems.

Each check returns ``Outcome`` records rather than raising, so a sweep can
report every failure it meets. ``sweep`` assembles a ``ConjectureReport``
whose rows are ordered by ``(n, key)`` regardless of how they were computed.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .canon import CANON_LIMIT, canonical_key, memo_key
from .catalogue import graph_catalogue
from .closed_forms import bound_l1, bound_l2, bound_l3
from .engine import Engine, EngineLimitError, default_engine
from .graph import (Graph, add_isolated, bits, chromatic_number, complete, complete_bipartite,
                    cycle, delete_edge, disjoint_union, induced_subgraph, is_chordal,
                    is_simplicial, max_clique_chordal, max_degree, path, q_graph, remove_vertex,
                    star)
from .graph6 import read_graph6_file, to_graph6

log = logging.getLogger(__name__)


@dataclass
class Outcome:
    """One instance of a checked statement. ``holds`` is ``None`` when the
    premise was not met and nothing was asserted."""

    check: str
    subject: str
    holds: bool | None
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    detail: str = ""


def _key(g: Graph) -> bytes:
    return canonical_key(g) if g.n <= CANON_LIMIT else memo_key(g.n, g.adj)


def _chi(g: Graph) -> int:
    return 0 if g.n == 0 else chromatic_number(g)


def clique_extremal(n: int, chi: int) -> Graph:
    return add_isolated(complete(chi), n - chi)


def star_extremal(n: int, delta: int) -> Graph:
    return add_isolated(star(delta), n - delta - 1)


# -- per-graph conjecture row -------------------------------------------------------

@dataclass
class ReportRow:
    key: str
    n: int
    m: int
    chi: int
    delta: int
    B: int
    T: int
    A: Fraction
    L1: Fraction
    L2: Fraction
    L3: Fraction
    c1: bool
    c2: bool
    c3: bool
    eq1: bool
    eq2: bool
    eq3: bool
    chordal: bool = False
    error: str = ""

    @property
    def passed(self) -> bool:
        return self.c1 and self.c2 and self.c3 and not self.error


def _bound_flags(a: Fraction, bound: Fraction, g: Graph, extremal: Graph) -> tuple[bool, bool]:
    eq = a == bound
    ok = a >= bound and eq == (_key(g) == _key(extremal))
    return ok, eq


def check_conjectures(g: Graph, engine: Engine | None = None) -> ReportRow:
    """Evaluate ``A(G)`` against ``L2(n, chi)``, ``L3(n, Delta + 1)`` and ``L1(n)``.

    A bound passes when ``A >= bound`` and equality occurs exactly on the
    conjectured extremal graph.
    """
    eng = engine or default_engine()
    n = g.n
    b, t = eng.bt_of(g)
    a = Fraction(t, b)
    chi, delta = _chi(g), max_degree(g)
    l1, l2, l3 = bound_l1(n), bound_l2(n, chi), bound_l3(n, delta + 1)
    c1, eq1 = _bound_flags(a, l2, g, clique_extremal(n, chi))
    c2, eq2 = _bound_flags(a, l3, g, star_extremal(n, delta))
    c3, eq3 = _bound_flags(a, l1, g, Graph.empty(n))
    return ReportRow(_key(g).decode("ascii"), n, g.m, chi, delta, b, t, a, l1, l2, l3,
                     c1, c2, c3, eq1, eq2, eq3, chordal=is_chordal(g))


# -- vertex and edge removal ----------------------------------------------------------

def check_removal_theorems(g: Graph, engine: Engine | None = None) -> list[Outcome]:
    """Strict growth of ``A`` when adding back a qualifying vertex or edge.

    For each vertex ``v``: if ``chi(G[N(v)]) >= |N(v)| - 3``, if ``deg v <= 4``,
    and if ``v`` is simplicial, ``A(G) > A(G - v)`` is asserted (one outcome per
    premise met). For each simplicial ``v`` and neighbour ``w``,
    ``A(G) > A(G - vw)``.
    """
    eng = engine or default_engine()
    out: list[Outcome] = []
    if g.n < 2:
        return out
    a = eng.average_colors(g)
    name = to_graph6(g)
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        a_minus = eng.average_colors(remove_vertex(g, v))
        simplicial = is_simplicial(g, v)
        premises = {
            "neighbourhood-chi": _chi(induced_subgraph(g, nb)) >= len(nb) - 3,
            "degree-at-most-4": len(nb) <= 4,
            "simplicial-vertex": simplicial,
        }
        for check, met in premises.items():
            if met:
                out.append(Outcome(check, f"{name} v={v}", a > a_minus, a, a_minus))
        if simplicial:
            for w in nb:
                a_edge = eng.average_colors(delete_edge(g, v, w))
                out.append(Outcome("simplicial-edge", f"{name} v={v} w={w}", a > a_edge, a, a_edge))
    return out


# -- unions with cycles, paths and Q graphs ------------------------------------------------

def check_cycle_vs_path(g: Graph, n: int, engine: Engine | None = None) -> Outcome:
    """``A(G u C_n) > A(G u P_n)``."""
    eng = engine or default_engine()
    lhs = eng.average_colors(disjoint_union(g, cycle(n)))
    rhs = eng.average_colors(disjoint_union(g, path(n)))
    return Outcome("cycle-beats-path", f"{to_graph6(g)} n={n}", lhs > rhs, lhs, rhs)


def check_q_vs_cycle(n: int, p: int, engine: Engine | None = None) -> list[Outcome]:
    """``A(Q_i u pK1) < A(C_n u pK1)`` for ``3 <= i < n``, ``n >= 5``."""
    eng = engine or default_engine()
    rhs = eng.average_colors(add_isolated(cycle(n), p))
    out = []
    for i in range(3, n):
        lhs = eng.average_colors(add_isolated(q_graph(i), p))
        out.append(Outcome("q-below-cycle", f"i={i} n={n} p={p}", lhs < rhs, lhs, rhs))
    return out


def check_triangle_vs_odd_cycles(n: int, engine: Engine | None = None) -> list[Outcome]:
    """``A(C_3 u (n-3)K1) < A(C_x u (n-x)K1)`` for odd ``5 <= x <= n``."""
    eng = engine or default_engine()
    lhs = eng.average_colors(add_isolated(cycle(3), n - 3))
    out = []
    for x in range(5, n + 1, 2):
        rhs = eng.average_colors(add_isolated(cycle(x), n - x))
        out.append(Outcome("triangle-below-odd-cycle", f"n={n} x={x}", lhs < rhs, lhs, rhs))
    return out


def check_union_comparisons(g: Graph, n: int, p: int = 0,
                            engine: Engine | None = None) -> list[Outcome]:
    """All union comparisons that apply to ``(g, n, p)``; the ``Q``/cycle and
    triangle/odd-cycle families need ``n >= 5``."""
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    out = [check_cycle_vs_path(g, n, engine)]
    if n >= 5:
        out += check_q_vs_cycle(n, p, engine)
        out += check_triangle_vs_odd_cycles(n, engine)
    return out


def check_cross_product(h1: Graph, h2: Graph, g: Graph, engine: Engine | None = None) -> Outcome:
    """If ``S(H1,k) S(H2,k') >= S(H2,k) S(H1,k')`` for all ``k > k'`` with one
    strict pair, assert ``A(G u H1) > A(G u H2)``."""
    eng = engine or default_engine()
    s1, s2 = eng.s_vector(h1), eng.s_vector(h2)
    top = max(len(s1), len(s2))
    a1 = list(s1) + [0] * (top - len(s1))
    a2 = list(s2) + [0] * (top - len(s2))
    subject = f"H1={to_graph6(h1)} H2={to_graph6(h2)} G={to_graph6(g)}"
    strict = False
    for k in range(top):
        for kp in range(k):
            d = a1[k] * a2[kp] - a2[k] * a1[kp]
            if d < 0:
                return Outcome("cross-product", subject, None, detail="premise not met")
            strict |= d > 0
    if not strict:
        return Outcome("cross-product", subject, None, detail="premise not met")
    lhs = eng.average_colors(disjoint_union(g, h1))
    rhs = eng.average_colors(disjoint_union(g, h2))
    return Outcome("cross-product", subject, lhs > rhs, lhs, rhs)


# -- chordal peeling ----------------------------------------------------------------

@dataclass
class PeelTrace:
    """Edge removals ``(v, w)`` with ``v`` simplicial, and ``A`` after each
    step (``values[0]`` is the starting graph)."""

    target: str
    steps: list[tuple[int, int]] = field(default_factory=list)
    values: list[Fraction] = field(default_factory=list)
    final: Graph | None = None

    @property
    def strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.values, self.values[1:]))


def _peel_step(g: Graph, v: int, w: int, trace: PeelTrace, eng: Engine) -> Graph:
    assert is_simplicial(g, v), (to_graph6(g), v)
    g = delete_edge(g, v, w)
    trace.steps.append((v, w))
    trace.values.append(eng.average_colors(g))
    return g


def _peel_to_clique(g: Graph, eng: Engine) -> PeelTrace:
    keep = 0
    for v in max_clique_chordal(g):
        keep |= 1 << v
    trace = PeelTrace("clique", values=[eng.average_colors(g)])
    while True:
        # a simplicial vertex outside the kept clique that still has an edge
        cand = next((v for v in range(g.n)
                     if not keep >> v & 1 and g.adj[v] and is_simplicial(g, v)), None)
        if cand is None:
            break
        g = _peel_step(g, cand, min(bits(g.adj[cand])), trace, eng)
    trace.final = g
    return trace


def _peel_to_star(g: Graph, eng: Engine) -> PeelTrace:
    degs = g.degrees()
    delta = max(degs, default=0)
    trace = PeelTrace("star", values=[eng.average_colors(g)])
    if delta == 0:
        trace.final = g
        return trace
    v = degs.index(delta)
    while True:
        rest = [u for u in range(g.n) if u != v and (g.adj[u] & ~(1 << v))]
        if not rest:
            break
        sub = induced_subgraph(g, rest + [v])
        inv = sorted(rest + [v])
        w = next(inv[i] for i in range(sub.n) if inv[i] != v and is_simplicial(sub, i))
        # w keeps its edge to v if it has one, so it ends up a leaf or isolated
        for x in sorted(bits(g.adj[w] & ~(1 << v))):
            g = _peel_step(g, w, x, trace, eng)
    trace.final = g
    return trace


def peel_chordal(g: Graph, engine: Engine | None = None) -> tuple[PeelTrace, PeelTrace]:
    """Reduce a chordal graph by simplicial-edge removals to ``K_chi u`` isolated
    vertices, and separately to ``K_{1,Delta} u`` isolated vertices."""
    if not is_chordal(g):
        raise ValueError(f"{to_graph6(g)} is not chordal")
    eng = engine or default_engine()
    return _peel_to_clique(g, eng), _peel_to_star(g, eng)


# -- remarks about the limits of simple proof strategies --------------------------------

def decimal6(x: Fraction) -> str:
    """``x`` correctly rounded (half to even) to six decimals."""
    scaled = round(x * 10**6)
    sign = "-" if scaled < 0 else ""
    q, r = divmod(abs(scaled), 10**6)
    return f"{sign}{q}.{r:06d}"


def decimal3(x: Fraction) -> str:
    scaled = round(x * 1000)
    return f"{scaled // 1000}.{scaled % 1000:03d}"


def check_counterexample_remarks(engine: Engine | None = None) -> list[Outcome]:
    eng = engine or default_engine()
    out = []
    k24 = complete_bipartite(2, 4)
    a24 = eng.average_colors(k24)
    for u, v in k24.edges():
        a = eng.average_colors(delete_edge(k24, u, v))
        out.append(Outcome("K24-edge-removal-increases", f"e={u}-{v}", a > a24, a, a24))
    g1, g2 = complete_bipartite(2, 3), add_isolated(complete(3), 2)
    a1, a2 = eng.average_colors(g1), eng.average_colors(g2)
    b1 = eng.average_colors(add_isolated(g1, 1))
    b2 = eng.average_colors(add_isolated(g2, 1))
    out.append(Outcome("K23-exact", "A(K23) = 7/2", a1 == Fraction(7, 2), a1, Fraction(7, 2)))
    out.append(Outcome("order-before", "A(K23) < A(K3u2K1)", a1 < a2, a1, a2))
    out.append(Outcome("order-after", "A(K23uK1) > A(K3u3K1)", b1 > b2, b1, b2))
    quoted = ["3.500", "3.529", "3.867", "3.831"]
    got = [decimal3(x) for x in (a1, a2, b1, b2)]
    out.append(Outcome("quoted-decimals", " ".join(quoted), got == quoted, detail=" ".join(got)))
    return out


# -- sweep ----------------------------------------------------------------------

@dataclass
class ClassSummary:
    kind: str            # "all", "chi" or "delta"
    n: int
    value: int | None
    count: int
    min_A: Fraction
    minimizers: list[str]
    expected: str
    expected_present: bool
    ok: bool


@dataclass
class ConjectureReport:
    rows: list[ReportRow]
    summaries: list[ClassSummary]
    theorem_checks: dict[str, dict[str, int]]
    skipped: int = 0
    extra_failures: list[Outcome] = field(default_factory=list)

    @property
    def violations(self) -> int:
        bad_rows = sum(1 for r in self.rows if not r.passed)
        bad_classes = sum(1 for s in self.summaries if not s.ok)
        bad_thms = sum(v["failures"] for v in self.theorem_checks.values())
        return bad_rows + bad_classes + bad_thms + len(self.extra_failures)


def _row_task(args):
    g6, conjectures, extra = args
    from .graph6 import from_graph6

    g = from_graph6(g6)
    eng = default_engine()
    try:
        row = check_conjectures(g, eng)
    except EngineLimitError as exc:
        return None, [], str(exc)
    fails: list[Outcome] = []
    if "removal" in extra:
        fails += [o for o in check_removal_theorems(g, eng) if o.holds is False]
    if "peel" in extra and row.chordal:
        for tr in peel_chordal(g, eng):
            if not tr.strictly_decreasing:
                fails.append(Outcome(f"peel-{tr.target}", row.key, False))
    if not conjectures >= {1}:
        row.c1 = True
    if not conjectures >= {2}:
        row.c2 = True
    if not conjectures >= {3}:
        row.c3 = True
    return row, fails, ""


def _summaries(rows: Sequence[ReportRow], conjectures: set[int]) -> list[ClassSummary]:
    groups: dict[tuple[str, int, int | None], list[ReportRow]] = {}
    for r in rows:
        if 3 in conjectures:
            groups.setdefault(("all", r.n, None), []).append(r)
        if 1 in conjectures:
            groups.setdefault(("chi", r.n, r.chi), []).append(r)
        if 2 in conjectures:
            groups.setdefault(("delta", r.n, r.delta), []).append(r)
    out = []
    for (kind, n, value), members in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0], kv[0][2] or 0)):
        if kind == "all":
            expected = Graph.empty(n)
        elif kind == "chi":
            expected = clique_extremal(n, value)
        else:
            expected = star_extremal(n, value)
        exp_key = _key(expected).decode("ascii")
        low = min(r.A for r in members)
        mins = [r.key for r in members if r.A == low]
        present = any(r.key == exp_key for r in members)
        ok = len(mins) == 1 and (mins[0] == exp_key if present else True)
        out.append(ClassSummary(kind, n, value, len(members), low, mins, exp_key, present, ok))
    return out


def _theorem_checks(rows: Sequence[ReportRow]) -> dict[str, dict[str, int]]:
    """Proved special cases: chordal graphs, and maximum degree 1 or 2."""
    checks = {name: {"graphs": 0, "failures": 0}
              for name in ("chordal", "max-degree-1", "max-degree-2-chi", "max-degree-2-delta")}

    def record(name, ok):
        checks[name]["graphs"] += 1
        checks[name]["failures"] += not ok

    for r in rows:
        if r.chordal:
            record("chordal", r.c1 and r.c2)
        if r.delta == 1:
            ok = (r.L2 == r.L3 == bound_l2(r.n, 2) and r.c1 and r.c2
                  and (r.A == r.L2) == (r.key == _key(clique_extremal(r.n, 2)).decode("ascii")))
            record("max-degree-1", ok)
        if r.delta == 2:
            record("max-degree-2-chi", r.c1)
            ok = r.c2 and (r.A == bound_l3(r.n, 3)) == (r.key == _key(star_extremal(r.n, 2)).decode("ascii"))
            record("max-degree-2-delta", ok)
    return checks


def iter_sources(orders: Iterable[int], source: str | Path | None, limit: int):
    """Yield ``(graph, skipped_flag)`` for the requested orders."""
    orders = set(orders)
    if source is None:
        for n in sorted(orders):
            for g in graph_catalogue(n):
                yield g, False
        return
    seen: set[bytes] = set()
    for g in read_graph6_file(source):
        if g.n not in orders:
            continue
        if g.n > limit:
            yield g, True
            continue
        k = _key(g)
        if k not in seen:
            seen.add(k)
            yield g, False


def sweep(orders: Iterable[int], source: str | Path | None = None,
          conjectures: Iterable[int] = (1, 2, 3), extra: Iterable[str] = (),
          jobs: int = 1, limit: int | None = None) -> ConjectureReport:
    """Run the conjecture checks over every graph of the given orders.

    ``extra`` may add ``"removal"`` (vertex/edge removal theorems on every
    graph) and ``"peel"`` (strict decrease along chordal peels).
    """
    conj = set(conjectures)
    extra = tuple(extra)
    lim = default_engine().limit if limit is None else limit
    tasks, skipped = [], 0
    for g, skip in iter_sources(orders, source, lim):
        if skip:
            skipped += 1
        else:
            tasks.append((to_graph6(g), conj, extra))
    if skipped:
        log.warning("skipped %d graphs above the engine limit", skipped)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row_task, tasks, chunksize=64))
    else:
        results = [_row_task(t) for t in tasks]
    rows, fails = [], []
    for row, f, err in results:
        if row is None:
            skipped += 1
            continue
        rows.append(row)
        fails += f
    rows.sort(key=lambda r: (r.n, r.key))
    return ConjectureReport(rows, _summaries(rows, conj), _theorem_checks(rows), skipped, fails)
