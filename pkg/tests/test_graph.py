import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from layered_wheels.construction import LayeredWheelParams, build
from layered_wheels.graph import (
    Graph,
    GraphError,
    components,
    complete_graph,
    cycle_graph,
    delete_edge,
    distance,
    find_triangle,
    girth,
    induced_subgraph,
    is_induced_path,
    is_triangle_free,
    path_graph,
    theta_graph,
    wall_graph,
)
from oracles import girth_by_cycles, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def random_graph(rng, n, p):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_invariants_sorted_symmetric():
    G = Graph(4, [(2, 0), (0, 1), (1, 2), (0, 2)])
    assert G.adj == ((1, 2), (0, 2), (0, 1), ())
    assert G.m == 3
    assert list(G.edges()) == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_from_adjacency_checks_symmetry():
    with pytest.raises(GraphError):
        Graph.from_adjacency([[1], []])


def test_induced_subgraph_examples():
    C5 = cycle_graph(5)
    same, idmap = induced_subgraph(C5, range(5))
    assert same == C5 and idmap == {i: i for i in range(5)}
    P, idmap = induced_subgraph(C5, [1, 2, 3])
    assert P == path_graph(3)
    lw = build(LayeredWheelParams(1, 3))
    P1, _ = induced_subgraph(lw.graph, lw.path(1))
    assert P1 == path_graph(17)
    with pytest.raises(GraphError):
        induced_subgraph(C5, [7])


@given(graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_induced_subgraph_composes(G, data):
    X = data.draw(st.sets(st.integers(0, max(G.n - 1, 0))).map(lambda s: sorted(v for v in s if v < G.n)))
    Y = data.draw(st.sets(st.sampled_from(X)) if X else st.just(set()))
    GX, mx = induced_subgraph(G, X)
    GXY, _ = induced_subgraph(GX, [mx[y] for y in Y])
    GY, _ = induced_subgraph(G, Y)
    assert GXY == GY


def test_distance_examples():
    P = path_graph(3)
    assert distance(P, 1, 1) == 0
    assert distance(P, 0, 2) == 2
    assert distance(Graph(4, [(0, 1), (2, 3)]), 0, 3) is None


@given(graphs(8))
@settings(max_examples=40, deadline=None)
def test_distance_matches_networkx_and_triangle_inequality(G):
    H = to_nx(G)
    lengths = dict(nx.all_pairs_shortest_path_length(H))
    for u in range(G.n):
        for v in range(G.n):
            assert distance(G, u, v) == lengths[u].get(v)
    for a, b, c in itertools.permutations(range(min(G.n, 5)), 3):
        dab, dbc, dac = distance(G, a, b), distance(G, b, c), distance(G, a, c)
        if dab is not None and dbc is not None:
            assert dac is not None and dac <= dab + dbc


def test_girth_examples():
    assert girth(cycle_graph(7)) == 7
    assert girth(path_graph(6)) is None
    assert girth(Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])) is None


def test_girth_of_g31_against_cycle_enumeration():
    # frozen from the cycle-enumeration oracle on the 51-vertex instance
    G = build(LayeredWheelParams(1, 3)).graph
    assert girth_by_cycles(G) == 11
    assert girth(G) == 11


def test_girth_matches_cycle_enumeration_on_random_graphs():
    rng = random.Random(11)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 12), rng.choice([0.15, 0.3, 0.5]))
        assert girth(G) == girth_by_cycles(G)


def test_girth_even_and_odd_cycles_share_a_vertex():
    # C_4 and C_5 glued at a vertex: the per-vertex BFS shortcut would misreport
    G = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 0)])
    assert girth(G) == 4


def test_components_match_networkx():
    rng = random.Random(5)
    for _ in range(50):
        G = random_graph(rng, rng.randint(0, 15), 0.12)
        ours = components(G)
        theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(G)))
        assert ours == theirs
        assert [c[0] for c in ours] == sorted(c[0] for c in ours)


def test_components_within():
    C6 = cycle_graph(6)
    assert components(C6, [0, 1, 3, 4]) == [[0, 1], [3, 4]]


def test_triangle_free_examples():
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(cycle_graph(4))
    assert is_triangle_free(build(LayeredWheelParams(1, 4)).graph)
    assert find_triangle(complete_graph(4)) == (0, 1, 2)


def test_is_induced_path():
    C5 = cycle_graph(5)
    assert is_induced_path(C5, [0, 1, 2])
    assert not is_induced_path(C5, [0, 1, 2, 3, 4])  # chord 4-0
    assert not is_induced_path(C5, [0, 2])


def test_delete_edge():
    G = delete_edge(cycle_graph(4), 3, 0)
    assert G == path_graph(4)
    with pytest.raises(GraphError):
        delete_edge(G, 0, 2)


def test_theta_graph_shape():
    T = theta_graph(2, 3, 4)
    assert T.n == 2 + 1 + 2 + 3
    assert T.degree(0) == T.degree(1) == 3
    assert not T.has_edge(0, 1)


def test_wall_graph_is_planar_subcubic():
    assert wall_graph(2).n == 6 and girth(wall_graph(2)) == 6  # one hexagon
    for k in (3, 4):
        W = wall_graph(k)
        H = to_nx(W)
        assert nx.is_connected(H) and nx.check_planarity(H)[0]
        assert W.max_degree() == 3
        assert min(W.degrees()) == 2
