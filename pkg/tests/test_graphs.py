import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixsub import graphs
from fixsub.graphs import Graph, GraphError
from fixsub.groups import is_isomorphic

from oracles import brute_isomorphic, girth_by_edge_removal
from strategies import small_graphs


def assert_simple(G: Graph):
    assert all(u < v for u, v in G.edges)
    assert len(set(G.edges)) == G.m
    for u in range(G.n):
        for v in range(G.n):
            assert G.has_edge(u, v) == G.has_edge(v, u)
        assert not G.has_edge(u, u)
    assert sum(G.degrees()) == 2 * G.m


def test_from_edges_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


@pytest.mark.parametrize("n", [3, 6, 14])
def test_cycle(n):
    C = graphs.make_cycle(n)
    assert C.m == n
    assert C.degrees() == (2,) * n
    assert C.is_connected()
    assert_simple(C)


def test_cycle_rejects_small():
    with pytest.raises(GraphError):
        graphs.make_cycle(2)


@pytest.mark.parametrize("n,m", [(1, 0), (4, 6), (6, 15)])
def test_complete(n, m):
    K = graphs.make_complete(n)
    assert K.m == m
    assert K.is_regular(n - 1)


def test_k4_is_the_3_cage():
    K4 = graphs.make_complete(4)
    assert K4.is_regular(3) and graphs.girth(K4) == 3


def test_complete_bipartite():
    K33 = graphs.make_complete_bipartite(3, 3)
    assert K33.m == 9 and K33.is_regular(3)
    assert not any(K33.has_edge(u, v) for u in range(3) for v in range(3))
    assert graphs.make_complete_bipartite(1, 1).edges == ((0, 1),)
    assert is_isomorphic(graphs.make_complete_bipartite(2, 2), graphs.make_cycle(4))


def test_circulant_examples():
    assert graphs.make_circulant(5, [1, -1]).edge_set == graphs.make_cycle(5).edge_set
    assert graphs.make_circulant(5, [1, -1, 2, -2]).edge_set == graphs.make_complete(5).edge_set
    # independent check against the 6! permutation scan
    assert brute_isomorphic(graphs.make_circulant(6, [1, -1, 3]), graphs.make_complete_bipartite(3, 3))


def test_circulant_rejects_bad_difference_sets():
    with pytest.raises(GraphError):
        graphs.make_circulant(6, [0, 1, 5])
    with pytest.raises(GraphError):
        graphs.make_circulant(6, [1])


@given(st.integers(3, 30), st.data())
def test_circulant_degree_is_difference_set_size(n, data):
    half = data.draw(st.sets(st.integers(1, n // 2), min_size=1))
    D = {d % n for h in half for d in (h, -h)}
    G = graphs.make_circulant(n, D)
    assert G.is_regular(len(D))
    assert_simple(G)


def test_petersen_graph():
    P = graphs.make_generalized_petersen(5, 2)
    assert (P.n, P.m) == (10, 15)
    assert graphs.girth(P) == 5 == girth_by_edge_removal(P)


def test_gp_named_members():
    assert is_isomorphic(graphs.make_generalized_petersen(10, 2), graphs.dodecahedron())
    cube = graphs.make_generalized_petersen(4, 1)
    assert is_isomorphic(cube, Graph.from_edges(8, [(a, b) for a in range(8) for b in range(8)
                                                     if a < b and bin(a ^ b).count("1") == 1]))


@pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (5, 3), (5, 0), (2, 1)])
def test_gp_rejects_k_out_of_range(n, k):
    with pytest.raises(GraphError):
        graphs.make_generalized_petersen(n, k)


def test_gp_invariants_all_valid_parameters():
    for n in range(3, 31):
        for k in range(1, (n + 1) // 2):
            if 2 * k >= n:
                continue
            G = graphs.make_generalized_petersen(n, k)
            assert (G.n, G.m) == (2 * n, 3 * n)
            assert G.is_regular(3)
            assert all(G.has_edge(i, (i + 1) % n) for i in range(n))


def test_heawood_and_cage8(heawood, cage8):
    assert heawood.is_regular(3) and heawood.n == 14 and heawood.is_bipartite()
    assert graphs.girth(heawood) == 6 == girth_by_edge_removal(heawood)
    assert cage8.is_regular(3) and cage8.n == 30
    assert graphs.girth(cage8) == 8 == girth_by_edge_removal(cage8)
    # chords at the first two rim vertices
    assert heawood.has_edge(0, 5) and heawood.has_edge(1, 10)


def test_lcf_k33_and_errors():
    assert brute_isomorphic(graphs.make_lcf(6, [3, 3]), graphs.make_complete_bipartite(3, 3))
    with pytest.raises(GraphError):
        graphs.make_lcf(6, [1, 1])  # chord duplicates a cycle edge
    with pytest.raises(GraphError):
        graphs.make_lcf(8, [2])  # degree overflow
    with pytest.raises(GraphError):
        graphs.make_lcf(7, [3])


def test_line_graphs():
    L = graphs.line_graph(graphs.make_complete_bipartite(3, 3))
    assert (L.n, L.m) == (9, 18) and L.is_regular(4)
    assert is_isomorphic(graphs.line_graph(graphs.make_cycle(5)), graphs.make_cycle(5))
    octa = graphs.line_graph(graphs.make_complete(4))
    assert octa.is_regular(4)
    assert brute_isomorphic(octa, graphs.make_circulant(6, [1, -1, 2, -2]))


def test_girth_of_trees_is_infinite():
    assert graphs.girth(graphs.make_path(6)) == math.inf
    assert graphs.girth(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])) == math.inf


@given(small_graphs(max_n=9))
def test_girth_matches_oracle(G):
    assert graphs.girth(G) == girth_by_edge_removal(G)


# graph6 ------------------------------------------------------------------------


def test_graph6_known_strings():
    # K4 -> "C~" is the textbook example; C5 is checked against networkx
    assert graphs.encode_graph6(graphs.make_complete(4)) == "C~"
    C5 = graphs.make_cycle(5)
    assert graphs.encode_graph6(C5) == "Dhc" == nx.to_graph6_bytes(nx.cycle_graph(5), header=False).decode().strip()


def test_graph6_roundtrip_named(heawood, cage8):
    for G in (heawood, cage8, graphs.make_generalized_petersen(10, 2), Graph.from_edges(0, ())):
        assert graphs.decode_graph6(graphs.encode_graph6(G)) == G
    assert graphs.decode_graph6(">>graph6<<" + graphs.encode_graph6(heawood)) == heawood


def test_graph6_roundtrip_1000_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(0, 12)
        G = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        s = graphs.encode_graph6(G)
        assert graphs.decode_graph6(s) == G
        ref = nx.from_graph6_bytes(s.encode())
        assert sorted(tuple(sorted(e)) for e in ref.edges()) == list(G.edges)


def test_graph6_large_n_header():
    G = graphs.make_cycle(70)
    s = graphs.encode_graph6(G)
    assert s.startswith("~")
    assert graphs.decode_graph6(s) == G
    assert s == nx.to_graph6_bytes(nx.cycle_graph(70), header=False).decode().strip()


@pytest.mark.parametrize("bad", ["", "   ", "C", "C~~", "C\x10", "~?"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        graphs.decode_graph6(bad)


def test_edgelist_roundtrip_and_errors(heawood):
    text = graphs.encode_edgelist(heawood)
    assert text.splitlines()[0] == "14 21"
    assert graphs.decode_edgelist(text) == heawood
    assert graphs.read_graph(text) == heawood
    assert graphs.read_graph(graphs.encode_graph6(heawood)) == heawood
    with pytest.raises(GraphError):
        graphs.decode_edgelist("3 2\n0 1\n")
    with pytest.raises(GraphError):
        graphs.decode_edgelist("3 1\n0 x\n")


@settings(max_examples=50)
@given(small_graphs(max_n=7))
def test_relabel_preserves_simplicity(G):
    p = list(range(G.n))
    random.Random(G.m).shuffle(p)
    H = G.relabel(p)
    assert_simple(H)
    assert sorted(H.degrees()) == sorted(G.degrees())
