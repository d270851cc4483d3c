import itertools
import random

import pytest

from layered_wheels.construction import LayeredWheelParams, VertexClass, build
from layered_wheels.graph import Graph, complete_graph, cycle_graph, path_graph, theta_graph
from layered_wheels.series_parallel import (
    HypothesisError,
    MissingClassification,
    TwoTerminalGraph,
    c_of_F,
    contract_to_h_prime,
    h_prime_by_edge_contraction,
    induced_with_classes,
    is_series_parallel,
    is_two_terminal_series_parallel,
    two_terminal_frame,
)
from oracles import treewidth_dp

S, M, B = VertexClass.SMALL, VertexClass.MEDIUM, VertexClass.BIG


def test_series_parallel_examples():
    assert is_series_parallel(cycle_graph(4))
    res = is_series_parallel(complete_graph(4))
    assert not res and res.core == complete_graph(4)
    assert is_series_parallel(theta_graph(2, 2, 2))
    assert is_series_parallel(Graph(0))


def test_series_parallel_matches_treewidth_dp():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(1, 12)
        p = rng.choice([0.15, 0.25, 0.4])
        G = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        res = is_series_parallel(G)
        assert bool(res) is (treewidth_dp(G) <= 2)
        if not res:
            assert min(res.core.degrees()) >= 3


def test_two_terminal_examples():
    T = theta_graph(2, 3, 4)
    assert is_two_terminal_series_parallel(T, 0, 1)
    assert is_two_terminal_series_parallel(path_graph(5), 0, 4)
    # a pendant vertex is not part of any s-t path
    assert not is_two_terminal_series_parallel(Graph(4, [(0, 1), (1, 2), (1, 3)]), 0, 2)
    assert not is_two_terminal_series_parallel(complete_graph(4), 0, 1)
    with pytest.raises(ValueError):
        is_two_terminal_series_parallel(path_graph(2), 0, 0)


def test_h_prime_of_first_path_is_a_path():
    lw = build(LayeredWheelParams(1, 3))
    H, cls = induced_with_classes(lw.graph, lw.classes, lw.path(1))
    hp = contract_to_h_prime(H, cls)
    assert hp.h_prime == path_graph(17)
    assert all(len(X) == 1 for X in hp.branch_sets)


def test_h_prime_of_a_star_is_one_vertex():
    H = Graph(4, [(0, 1), (0, 2), (0, 3)])
    hp = contract_to_h_prime(H, [B, M, M, M])
    assert hp.h_prime == Graph(1)
    assert hp.roots == (0,) and hp.big_nodes() == [0]


def test_h_prime_needs_classes():
    with pytest.raises(MissingClassification):
        contract_to_h_prime(path_graph(3), [S, S])


@pytest.mark.parametrize("g,k", [(1, 3), (2, 3), (1, 4)])
def test_h_prime_two_ways_agree(g, k):
    lw = build(LayeredWheelParams(g, k))
    hp = contract_to_h_prime(lw.graph, lw.classes)
    assert hp.h_prime == h_prime_by_edge_contraction(lw.graph, lw.classes)
    assert is_series_parallel(hp.h_prime)


def test_h_prime_on_random_subgraphs():
    rng = random.Random(21)
    lw = build(LayeredWheelParams(1, 4))
    for _ in range(40):
        keep = [v for v in range(lw.graph.n) if rng.random() > 0.3]
        H, cls = induced_with_classes(lw.graph, lw.classes, keep)
        hp = contract_to_h_prime(H, cls)
        assert hp.h_prime == h_prime_by_edge_contraction(H, cls)
        assert treewidth_dp(hp.h_prime) <= 2 if hp.h_prime.n <= 12 else is_series_parallel(hp.h_prime)


def test_h_prime_relabel_invariant():
    lw = build(LayeredWheelParams(1, 3))
    rng = random.Random(4)
    perm = list(range(lw.graph.n))
    rng.shuffle(perm)
    H2 = Graph(lw.graph.n, [(perm[u], perm[v]) for u, v in lw.graph.edges()])
    cls2 = [None] * lw.graph.n
    for v, c in enumerate(lw.classes):
        cls2[perm[v]] = c
    a = contract_to_h_prime(lw.graph, lw.classes)
    b = contract_to_h_prime(H2, cls2)
    assert (a.h_prime.n, a.h_prime.m) == (b.h_prime.n, b.h_prime.m)
    assert sorted(a.h_prime.degrees()) == sorted(b.h_prime.degrees())
    assert {frozenset(perm[v] for v in X) for X in a.branch_sets} == {frozenset(X) for X in b.branch_sets}


def test_c_of_f_disjoint_paths_is_unchanged():
    # three internally disjoint s-t paths, no cross edges: c(F) = F
    T = theta_graph(3, 3, 3)
    paths = [[0, 2, 3, 1], [0, 4, 5, 1], [0, 6, 7, 1]]
    res = c_of_F(TwoTerminalGraph(T, 0, 1), paths)
    assert res.b_prime == ()
    assert res.c_of_f.graph == T


@pytest.mark.parametrize("g,k", [(1, 3), (2, 3), (1, 4)])
def test_c_of_f_on_layered_frame(g, k):
    lw = build(LayeredWheelParams(g, k))
    F, paths = two_terminal_frame(lw)
    res = c_of_F(F, paths)
    # bigs on the last layer have no neighbour off their path, so they land in S'
    assert sorted(res.b_prime) == sorted(b for b in lw.big if lw.labels[b].layer < k)
    assert is_two_terminal_series_parallel(res.c_of_f.graph, res.c_of_f.source, res.c_of_f.sink)


def test_c_of_f_rejects_crossing_neighbours():
    # two cross edges from path 1 landing on path 2 in reverse order
    s, t = 0, 1
    p1 = [s, 2, 3, 4, 5, t]
    p2 = [s, 6, 7, 8, 9, t]
    G = Graph(10, list(zip(p1, p1[1:])) + list(zip(p2, p2[1:])) + [(2, 9), (4, 7)])
    with pytest.raises(HypothesisError) as exc:
        c_of_F(TwoTerminalGraph(G, s, t), [p1, p2])
    assert exc.value.condition == "iii"


def test_c_of_f_rejects_uncovered_vertex():
    G = Graph(5, [(0, 2), (2, 1), (2, 4), (0, 3), (3, 1)])
    with pytest.raises(HypothesisError) as exc:
        c_of_F(TwoTerminalGraph(G, 0, 1), [[0, 2, 1], [0, 3, 1]])
    assert exc.value.condition == "i"
