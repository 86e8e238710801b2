import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixsub import graphs
from fixsub.graphs import GraphError
from fixsub.hamilton import (
    HamCycle,
    count_hamiltonian_cycles,
    enumerate_hamiltonian_cycles,
    is_hamiltonian,
    longest_common_path,
    p_distribution,
    parse_cycle,
)

from oracles import longest_common_path_brute, naive_hamiltonian_cycles
from strategies import small_graphs


def test_canonical_rotation_and_direction():
    a = HamCycle.from_order([3, 4, 0, 1, 2])
    b = HamCycle.from_order([2, 1, 0, 4, 3])
    assert a == b
    assert a.order == (0, 1, 2, 3, 4)
    assert str(a) == "0 1 2 3 4"
    assert parse_cycle("4 3 2 1 0") == a


def test_from_edges_and_validation(heawood):
    C = HamCycle.from_order(range(14), heawood)
    assert HamCycle.from_edges(C.edges, 14, heawood) == C
    with pytest.raises(GraphError):
        HamCycle.from_order([0, 2, 1] + list(range(3, 14)), heawood)
    with pytest.raises(GraphError):
        HamCycle.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6)
    with pytest.raises(GraphError):
        HamCycle.from_order([0, 1, 2], heawood)


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=8))
def test_enumeration_matches_naive_dfs(G):
    cycles = enumerate_hamiltonian_cycles(G)
    assert {C.edges for C in cycles} == naive_hamiltonian_cycles(G)
    assert len({C.order for C in cycles}) == len(cycles)
    assert is_hamiltonian(G) == bool(cycles)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=8), st.sampled_from([0, 2, 5]))
def test_check_every_does_not_change_the_answer(G, every):
    assert enumerate_hamiltonian_cycles(G, every) == enumerate_hamiltonian_cycles(G)


@pytest.mark.parametrize("n", range(3, 8))
def test_complete_graph_counts(n):
    assert count_hamiltonian_cycles(graphs.make_complete(n)) == math.factorial(n - 1) // 2


@pytest.mark.parametrize(
    "G,count",
    [
        (graphs.make_complete(4), 3),
        (graphs.make_complete_bipartite(3, 3), 6),
        (graphs.make_generalized_petersen(5, 2), 0),
        (graphs.heawood(), 24),
        (graphs.dodecahedron(), 30),
        (graphs.tutte_8cage(), 144),
        (graphs.line_graph(graphs.make_complete_bipartite(3, 3)), 48),
        (graphs.make_path(5), 0),
    ],
)
def test_named_counts(G, count):
    assert count_hamiltonian_cycles(G) == count


@pytest.mark.parametrize("G", [graphs.heawood(), graphs.make_generalized_petersen(7, 2), graphs.make_complete(6)])
def test_count_invariant_under_20_relabelings(G):
    base = count_hamiltonian_cycles(G)
    rng = random.Random(G.n)
    for _ in range(20):
        p = list(range(G.n))
        rng.shuffle(p)
        assert count_hamiltonian_cycles(G.relabel(p)) == base


def test_image_under_permutation(heawood, rim_cycle):
    # rotating the rim by two steps keeps the alternating chord pattern
    p = tuple((v + 2) % 14 for v in range(14))
    assert rim_cycle.image(p) == rim_cycle
    for C in enumerate_hamiltonian_cycles(heawood):
        assert C.image(p).edges <= heawood.edge_set


def test_longest_common_path_examples(heawood, rim_cycle):
    assert longest_common_path(rim_cycle, rim_cycle) == 14
    C5 = HamCycle.from_order(range(5))
    other = HamCycle.from_order([0, 1, 2, 4, 3])
    assert longest_common_path(C5, other) == 2
    C0 = HamCycle.from_order([0, 1, 10, 11, 6, 7, 2, 3, 12, 13, 8, 9, 4, 5], heawood)
    assert longest_common_path(C0, rim_cycle) == 1
    with pytest.raises(GraphError):
        longest_common_path(C5, rim_cycle)


def test_longest_common_path_rejects_different_hosts():
    a = HamCycle.from_order(range(4), graphs.make_complete(4))
    b = HamCycle.from_order(range(4), graphs.make_cycle(4))
    with pytest.raises(GraphError):
        longest_common_path(a, b)


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 10), st.randoms(use_true_random=False))
def test_longest_common_path_matches_brute(n, rng):
    a, b = list(range(n)), list(range(n))
    rng.shuffle(a)
    rng.shuffle(b)
    c1, c2 = HamCycle.from_order(a), HamCycle.from_order(b)
    assert longest_common_path(c1, c2) == longest_common_path_brute(c1, c2) == longest_common_path(c2, c1)


def test_p_distribution_heawood(heawood, rim_cycle):
    assert p_distribution(heawood, rim_cycle) == {1: 2, 2: 7, 3: 7, 4: 7, 14: 1}


@pytest.mark.parametrize("n", [3, 5, 9])
def test_p_distribution_of_a_bare_cycle(n):
    C = graphs.make_cycle(n)
    assert p_distribution(C, HamCycle.from_order(range(n))) == {n: 1}


def test_p_distribution_k4_totals():
    K4 = graphs.make_complete(4)
    dist = p_distribution(K4, HamCycle.from_order(range(4)))
    assert sum(dist.values()) == 3
    # the other two cycles share two disjoint edges with 0-1-2-3
    assert dist == {1: 2, 4: 1}
