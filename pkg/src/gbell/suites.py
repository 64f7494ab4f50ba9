"""Verification suites run by ``gbell verify`` and the acceptance tests.

Every suite walks its documented parameter range and returns a
``SuiteResult`` with the number of checked instances and the failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_forms as cf
from .canon import is_isomorphic
from .catalogue import extension_catalogue, tree_catalogue
from .engine import Engine, default_engine, refined_counts, s_vector_deletion
from .graph import (Graph, add_edge, add_isolated, bits, chromatic_number, complement, complete,
                    contract, cycle, disjoint_union, is_chordal, join, max_degree, path,
                    remove_vertex)
from .graph6 import to_graph6
from .lab import (check_counterexample_remarks, check_cross_product, check_cycle_vs_path,
                  check_q_vs_cycle, check_removal_theorems, check_triangle_vs_odd_cycles,
                  clique_extremal, peel_chordal, star_extremal)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, cond: bool, what: str) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(what)

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.failures += other.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed"


def _catalogue(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from extension_catalogue(n)


def _bt(s) -> tuple[int, int]:
    return sum(s), sum(k * x for k, x in enumerate(s, start=1))


# -- recurrences ------------------------------------------------------------------

def recurrences(max_n: int = 6, engine: Engine | None = None) -> SuiteResult:
    """Deletion and addition identities on every edge and non-edge."""
    eng = engine or default_engine()
    res = SuiteResult("recurrences")
    for g in _catalogue(max_n, 2):
        s = eng.s_vector(g)
        g6 = to_graph6(g)
        for u, v in g.edges():
            res.expect(s_vector_deletion(g, u, v, eng) == s, f"deletion {g6} {u}-{v}")
        for u, v in g.non_edges():
            plus = eng.s_vector(add_edge(g, u, v))
            merged = eng.s_vector(contract(g, u, v)) + (0,)
            res.expect(tuple(a + b for a, b in zip(plus, merged)) == s, f"addition {g6} {u}-{v}")
    return res


def add_vertex(max_n: int = 6, engine: Engine | None = None) -> SuiteResult:
    """``B`` and ``T`` of ``G`` from refined counts of ``G - v`` on ``N(v)``."""
    eng = engine or default_engine()
    res = SuiteResult("add-vertex")
    for g in _catalogue(max_n):
        b, t = eng.bt_of(g)
        for v in range(g.n):
            h = remove_vertex(g, v)
            w = [x - (x > v) for x in bits(g.adj[v])]
            rc = refined_counts(h, w)
            bh = sum(rc.values())
            th = sum(k * c for (k, _), c in rc.items())
            b_pred = bh + sum((k - i) * c for (k, i), c in rc.items())
            t_pred = th + sum((k * (k - i) + 1) * c for (k, i), c in rc.items())
            res.expect(b == b_pred and t == t_pred, f"add-vertex {to_graph6(g)} v={v}")
    return res


# -- join --------------------------------------------------------------------------

def join_laws(max_total: int = 9, dominant_max_n: int = 8, engine: Engine | None = None) -> SuiteResult:
    """Multiplicativity of ``B``, the ``T`` product rule and additivity of ``A``
    on every pair of catalogue graphs with ``n1 + n2 <= max_total``; plus
    ``A(G) = A(G - v) + 1`` for dominant ``v``."""
    eng = engine or default_engine()
    res = SuiteResult("join")
    for n1 in range(1, max_total // 2 + 1):
        for n2 in range(n1, max_total - n1 + 1):
            for g1 in extension_catalogue(n1):
                b1, t1 = eng.bt_of(g1)
                for g2 in extension_catalogue(n2):
                    b2, t2 = eng.bt_of(g2)
                    b, t = eng.bt_of(join(g1, g2))
                    res.expect(b == b1 * b2 and t == t1 * b2 + b1 * t2
                               and Fraction(t, b) == Fraction(t1, b1) + Fraction(t2, b2),
                               f"join {to_graph6(g1)} + {to_graph6(g2)}")
    for g in _catalogue(dominant_max_n, 2):
        for v in range(g.n):
            if g.degree(v) == g.n - 1:
                res.expect(eng.average_colors(g) == eng.average_colors(remove_vertex(g, v)) + 1,
                           f"dominant {to_graph6(g)} v={v}")
    return res


# -- unions --------------------------------------------------------------------------

def _random_graph(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])


def union_laws(max_total: int = 8, pairs: int = 150, max_order: int = 10, seed: int = 0,
               engine: Engine | None = None) -> SuiteResult:
    """Union/clique expansion and ``s_union`` on random pairs, cycle-versus-path
    on every catalogue graph that fits, the ``Q``/cycle and triangle/odd-cycle
    comparisons, and cross-product dominance on random triples."""
    eng = engine or default_engine()
    rng = random.Random(seed)
    res = SuiteResult("union")
    for _ in range(pairs):
        total = rng.randint(2, max_total)
        n1 = rng.randint(1, total - 1)
        g, h = _random_graph(rng, n1), _random_graph(rng, total - n1)
        sh = eng.s_vector(h)
        b, t = eng.bt_of(disjoint_union(g, h))
        exp_b = sum(sh[k - 1] * eng.bt_of(disjoint_union(g, complete(k)))[0] for k in range(1, h.n + 1))
        exp_t = sum(sh[k - 1] * eng.bt_of(disjoint_union(g, complete(k)))[1] for k in range(1, h.n + 1))
        tag = f"{to_graph6(g)} u {to_graph6(h)}"
        res.expect(b == exp_b and t == exp_t, f"union-clique {tag}")
        res.expect(cf.s_union(eng.s_vector(g), sh) == eng.s_vector(disjoint_union(g, h)), f"s_union {tag}")
    for n in range(3, max_order + 1):
        for g in _catalogue(min(max_order - n, 7)):
            o = check_cycle_vs_path(g, n, eng)
            res.expect(bool(o.holds), f"{o.check} {o.subject}")
    for n in range(5, max_order + 1):
        for p in range(0, max_order - n + 1):
            for o in check_q_vs_cycle(n, p, eng):
                res.expect(bool(o.holds), f"{o.check} {o.subject}")
        for o in check_triangle_vs_odd_cycles(n, eng):
            res.expect(bool(o.holds), f"{o.check} {o.subject}")
    for _ in range(pairs):
        h1, h2 = _random_graph(rng, rng.randint(1, 4)), _random_graph(rng, rng.randint(1, 4))
        g = _random_graph(rng, rng.randint(0, 3))
        o = check_cross_product(h1, h2, g, eng)
        if o.holds is not None:
            res.expect(o.holds, f"{o.check} {o.subject}")
    return res


# -- closed forms ----------------------------------------------------------------------

def closed_forms(engine: Engine | None = None, empty_max: int = 12, tree_max: int = 8,
                 cycle_max: int = 9, p_max: int = 2, clique_total: int = 12,
                 complement_max: int = 14) -> SuiteResult:
    eng = engine or default_engine()
    res = SuiteResult("closed-forms")
    A = eng.average_colors
    for n in range(1, empty_max + 1):
        res.expect(cf.a_empty(n) == A(Graph.empty(n)), f"empty n={n}")
    for n in range(1, tree_max + 1):
        for tree in tree_catalogue(n):
            for p in range(p_max + 1):
                res.expect(cf.a_tree_plus_isolated(n, p) == A(add_isolated(tree, p)),
                           f"tree {to_graph6(tree)} p={p}")
    for n in range(3, cycle_max + 1):
        for p in range(p_max + 1):
            res.expect(cf.a_cycle_plus_isolated(n, p) == A(add_isolated(cycle(n), p)), f"cycle n={n} p={p}")
    for r in range(1, clique_total + 1):
        for p in range(0, clique_total - r + 1):
            g = add_isolated(complete(r), p)
            s = eng.s_vector(g)
            res.expect(all(cf.s_clique_plus_isolated(r, p, k) == s[k - 1] for k in range(r, r + p + 1))
                       and not any(s[:r - 1]), f"clique S r={r} p={p}")
            res.expect(cf.a_clique_plus_isolated(r, p) == A(g), f"clique A r={r} p={p}")
    for n in range(1, complement_max + 1):
        g = complement(path(n))
        b, t = eng.bt_of(g)
        res.expect(cf.b_path_complement(n) == b and cf.a_path_complement(n) == Fraction(t, b),
                   f"path-complement n={n}")
    for n in range(4, complement_max + 1):
        g = complement(cycle(n))
        b, t = eng.bt_of(g)
        res.expect(cf.b_cycle_complement(n) == b and cf.a_cycle_complement(n) == Fraction(t, b),
                   f"cycle-complement n={n}")
    for n in range(1, clique_total + 1):
        for r in range(1, n + 1):
            l1, l2, l3 = cf.bound_l1(n), cf.bound_l2(n, r), cf.bound_l3(n, r)
            res.expect(l2 == A(clique_extremal(n, r)) and l3 == A(star_extremal(n, r - 1)),
                       f"bounds n={n} r={r}")
            if r >= 2:
                res.expect(l1 < l2 and l1 < l3, f"bound chain n={n} r={r}")
                if r == 2:
                    res.expect(l2 == l3, f"L2 = L3 at r=2, n={n}")
    return res


# -- Q-graph identities --------------------------------------------------------------

def q_lemmas(max_order: int = 10, engine: Engine | None = None) -> SuiteResult:
    """The three S-vector identities for ``Q_n`` and odd cycles, every parameter
    combination whose graphs have order at most ``max_order``."""
    eng = engine or default_engine()
    res = SuiteResult("q-lemmas")
    for n in range(3, max_order + 1):
        for p in range(0, max_order - n + 1):
            for x in range(p + 1):
                m = cf.check_q_shift_identity(n, p, x, eng)
                res.expect(bool(m), m.name)
    for n in range(3, max_order + 1, 2):
        for p in range(0, max_order - n + 1):
            m = cf.check_odd_cycle_decomposition(n, p, eng)
            res.expect(bool(m), m.name)
    for n in range(5, max_order + 1):
        for x in range(5, n + 1, 2):
            m = cf.check_c3_expansion(n, x, eng)
            res.expect(bool(m), m.name)
    return res


# -- removal theorems and peels ------------------------------------------------------------

def removal_theorems(max_n: int = 7, engine: Engine | None = None) -> SuiteResult:
    eng = engine or default_engine()
    res = SuiteResult("removal-theorems")
    for g in _catalogue(max_n, 2):
        for o in check_removal_theorems(g, eng):
            res.expect(bool(o.holds), f"{o.check} {o.subject}")
        if is_chordal(g):
            by_clique, by_star = peel_chordal(g, eng)
            tag = to_graph6(g)
            res.expect(by_clique.strictly_decreasing and by_star.strictly_decreasing, f"peel monotone {tag}")
            res.expect(is_isomorphic(by_star.final, star_extremal(g.n, max_degree(g))),
                       f"star peel end {tag}")
            res.expect(is_isomorphic(by_clique.final, clique_extremal(g.n, chromatic_number(g))),
                       f"clique peel end {tag}")
    return res


def counterexamples(engine: Engine | None = None) -> SuiteResult:
    res = SuiteResult("counterexamples")
    for o in check_counterexample_remarks(engine):
        res.expect(bool(o.holds), f"{o.check} {o.subject} {o.detail}")
    return res


SUITES = {
    "recurrences": lambda **kw: _combine("recurrences", recurrences(**kw), add_vertex(**kw)),
    "join": join_laws,
    "union": union_laws,
    "closed-forms": closed_forms,
    "q-lemmas": q_lemmas,
    "removal-theorems": removal_theorems,
    "counterexamples": counterexamples,
}


def _combine(name: str, *parts: SuiteResult) -> SuiteResult:
    out = SuiteResult(name)
    for p in parts:
        out.merge(p)
    return out
