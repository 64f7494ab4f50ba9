from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings

from gbell.catalogue import extension_catalogue
from gbell.engine import (Engine, EngineLimitError, average_colors, bt_of, oracle_s_vector,
                          refined_counts, s_vector, s_vector_deletion, stable_partitions)
from gbell.graph import Graph, complement, complete, cycle, path
from gbell.numbers import bell, stirling2, two_bell

from conftest import graphs


def test_worked_example():
    g = complement(path(5))
    assert s_vector(g) == (0, 0, 3, 4, 1)
    assert bt_of(g) == (8, 30)
    assert average_colors(g) == Fraction(15, 4)


def test_basic_vectors():
    assert s_vector(Graph.empty(3)) == (1, 3, 1)
    assert s_vector(complete(3)) == (0, 0, 1)
    assert bt_of(complete(2)) == (1, 2)
    assert s_vector(Graph.empty(1)) == (1,)


@pytest.mark.parametrize("n", range(1, 13))
def test_empty_graph_is_bell(n):
    assert s_vector(Graph.empty(n)) == tuple(stirling2(n, k) for k in range(1, n + 1))
    assert bt_of(Graph.empty(n)) == (bell(n), two_bell(n))


@pytest.mark.parametrize("n", range(2, 13))
def test_path_average(n):
    assert average_colors(path(n)) == Fraction(bell(n), bell(n - 1))
    assert average_colors(complete(n)) == n


def test_oracle_examples():
    assert oracle_s_vector(path(3)) == (0, 1, 1)
    # {02|13}, {02|1|3}, {13|0|2} and all singletons
    assert oracle_s_vector(cycle(4)) == (0, 1, 2, 1)
    assert sum(oracle_s_vector(cycle(4))) == bell(3) - bell(2) + bell(1)
    assert sum(oracle_s_vector(complement(cycle(4)))) == 7
    assert len(list(stable_partitions(path(3)))) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_engine_matches_oracle(n):
    eng = Engine()
    for g in extension_catalogue(n):
        assert eng.s_vector(g) == oracle_s_vector(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=7, max_n=9))
def test_engine_matches_oracle_random(g):
    assert s_vector(g) == oracle_s_vector(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_vector_invariants(g):
    s = s_vector(g)
    assert len(s) == g.n and s[-1] == 1 and min(s) >= 0
    first = next(k for k, x in enumerate(s, start=1) if x)
    assert all(x > 0 for x in s[first - 1:])


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_memo_is_invisible(g):
    assert Engine(memo=False).s_vector(g) == Engine().s_vector(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_deletion_identity(g):
    for u, v in g.edges():
        assert s_vector_deletion(g, u, v) == s_vector(g)


def test_refined_counts():
    p3 = path(3)
    rc = refined_counts(p3, [])
    assert {k: c for (k, i), c in rc.items()} == {2: 1, 3: 1}
    assert all(i == 0 for (_, i) in rc)
    assert refined_counts(complete(2), [0, 1]) == {(2, 2): 1}
    for g in (cycle(5), complement(path(6))):
        rc = refined_counts(g, [0, 2])
        s = s_vector(g)
        for k in range(1, g.n + 1):
            assert sum(c for (kk, _), c in rc.items() if kk == k) == s[k - 1]
        assert all(0 <= i <= min(k, 2) for (k, i) in rc)


def test_add_vertex_identity_on_path_endpoint():
    g, h = path(4), path(3)
    rc = refined_counts(h, [0])
    b_h, t_h = bt_of(h)
    b = b_h + sum((k - i) * c for (k, i), c in rc.items())
    t = t_h + sum((k * (k - i) + 1) * c for (k, i), c in rc.items())
    assert (b, t) == bt_of(g)


def test_limits(monkeypatch):
    with pytest.raises(EngineLimitError):
        Engine(limit=5).s_vector(path(6))
    with pytest.raises(EngineLimitError):
        oracle_s_vector(path(12))
    with pytest.raises(ValueError):
        s_vector(Graph.empty(0))
    monkeypatch.setenv("GBELL_ENGINE_LIMIT", "4")
    with pytest.raises(EngineLimitError):
        Engine().s_vector(path(5))


def test_large_sparse_graph():
    # exercises the labeled memo above the canonical-labeling bound
    assert bt_of(path(14))[0] == bell(13)


def test_shared_engine_across_threads():
    eng = Engine()
    gs = extension_catalogue(6)
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(eng.s_vector, gs))
    assert got == [Engine().s_vector(g) for g in gs]
