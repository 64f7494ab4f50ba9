import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbell.canon import CANON_LIMIT, canonical_graph, canonical_key, is_isomorphic, memo_key
from gbell.catalogue import (bruteforce_catalogue, extension_catalogue, graph_catalogue,
                             is_connected, tree_catalogue)
from gbell.graph import Graph, complement, cycle, path, relabel, star
from gbell.graph6 import (Graph6Error, from_graph6, read_graph6_file, to_graph6,
                          write_graph6_file)

from conftest import graphs

# non-isomorphic graphs of order 0..8, and trees of order 1..10
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


@pytest.mark.parametrize("n", range(0, 8))
def test_catalogue_counts(n):
    graphs_n = extension_catalogue(n)
    assert len(graphs_n) == GRAPH_COUNTS[n]
    assert len({canonical_key(g) for g in graphs_n}) == len(graphs_n)


@pytest.mark.slow
def test_catalogue_count_order_8():
    assert len(extension_catalogue(8)) == GRAPH_COUNTS[8]


@pytest.mark.parametrize("n", range(1, 7))
def test_bruteforce_matches_extension(n):
    a = sorted(canonical_key(g) for g in bruteforce_catalogue(n))
    b = sorted(canonical_key(g) for g in extension_catalogue(n))
    assert a == b


def test_small_catalogue_by_hand():
    keys = {canonical_key(g) for g in extension_catalogue(3)}
    expected = {canonical_key(g) for g in (Graph.empty(3), Graph.from_edges(3, [(0, 1)]),
                                           path(3), cycle(3))}
    assert keys == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts(n):
    trees = tree_catalogue(n)
    assert len(trees) == TREE_COUNTS[n - 1]
    assert all(t.m == n - 1 and is_connected(t) for t in trees)


@settings(max_examples=200)
@given(graphs(max_n=9), st.data())
def test_key_invariant_under_relabeling(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = relabel(g, perm)
    assert canonical_key(g) == canonical_key(h)
    assert canonical_graph(g) == canonical_graph(h)


def test_key_distinguishes_cospectral_pair():
    # C4 u K1 and the star K_{1,4} share a spectrum
    a = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert canonical_key(a) != canonical_key(star(4))
    assert not is_isomorphic(a, star(4))


def test_regular_graphs():
    # 2-regular on 6 vertices: C6 versus two triangles
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(cycle(6)) != canonical_key(two_triangles)
    assert is_isomorphic(complement(cycle(5)), cycle(5))


def test_key_limit():
    g = path(CANON_LIMIT + 1)
    with pytest.raises(ValueError):
        canonical_key(g)
    assert memo_key(g.n, g.adj)


def test_graph6_known_strings():
    assert to_graph6(cycle(3)) == "Bw"
    assert to_graph6(path(3)) == "Bg"
    assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert to_graph6(Graph.empty(0)) == "?"
    assert from_graph6(">>graph6<<Bw\n") == cycle(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_graph6_round_trip(n):
    for g in extension_catalogue(n):
        s = to_graph6(g)
        assert from_graph6(s) == g and to_graph6(from_graph6(s)) == s
        assert all(63 <= ord(c) <= 126 for c in s)


@pytest.mark.slow
def test_graph6_round_trip_order_8():
    for g in extension_catalogue(8):
        s = to_graph6(g)
        assert to_graph6(from_graph6(s)) == s


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "Bx", "~~~~"])
def test_graph6_rejects(bad):
    with pytest.raises(Graph6Error):
        from_graph6(bad)


def test_graph6_file_line_numbers(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Bw\n\nBg\nB!\n")
    it = read_graph6_file(f)
    assert next(it) == cycle(3)
    assert next(it) == path(3)
    with pytest.raises(Graph6Error) as err:
        next(it)
    assert err.value.line == 4 and "line 4" in str(err.value)


def test_file_catalogue_dedups(tmp_path):
    f = tmp_path / "g.g6"
    write_graph6_file(f, [path(3), relabel(path(3), [1, 0, 2]), cycle(3), path(4)])
    got = list(graph_catalogue(3, f))
    assert len(got) == 2


def test_file_catalogue_equals_generator(tmp_path):
    f = tmp_path / "g5.g6"
    write_graph6_file(f, bruteforce_catalogue(5))
    a = sorted(canonical_key(g) for g in graph_catalogue(5, f))
    assert a == sorted(canonical_key(g) for g in extension_catalogue(5))
