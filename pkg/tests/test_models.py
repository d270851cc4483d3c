import itertools
import random

import networkx as nx
import pytest

from layered_wheels.construction import LayeredWheelParams, build
from layered_wheels.graph import Graph, complete_graph, cycle_graph, path_graph
from layered_wheels.models import (
    Model,
    ModelError,
    contains_induced_minor,
    contract_model,
    linear_clique_model,
    validate_model,
)
from layered_wheels.search import BudgetExceeded
from oracles import has_induced_minor, to_nx


def test_validate_model_examples():
    K2 = complete_graph(2)
    ok = validate_model(Model.of(K2, [[0], [1]], K2), require_linear=True, require_induced=True)
    assert ok
    P3 = path_graph(3)
    bad = validate_model(Model.of(P3, [[0], [2]], K2))
    assert not bad and bad.condition == "edges"
    C4 = cycle_graph(4)
    both = validate_model(Model.of(C4, [[0, 1], [2, 3]], K2), require_linear=True, require_induced=True)
    assert both


def test_validate_model_names_first_violation():
    C6 = cycle_graph(6)
    E2 = Graph(2)
    assert validate_model(Model.of(C6, [[0, 2], [4]], E2)).condition == "connected"
    assert validate_model(Model.of(C6, [[0, 1], [1, 2]], E2)).condition == "disjoint"
    # pattern non-edge but the sets touch
    assert validate_model(Model.of(C6, [[0], [1]], E2), require_induced=True).condition == "induced"
    # a branch set that is connected but not an induced path
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert validate_model(Model.of(star, [[0, 1, 2, 3]], Graph(1)), require_linear=True).condition == "linear"


@pytest.mark.parametrize("g,k", [(1, 3), (1, 5), (2, 1), (2, 4), (3, 6)])
def test_linear_clique_model(g, k):
    lw = build(LayeredWheelParams(g, k))
    model, witnesses = linear_clique_model(lw)
    assert validate_model(model, require_linear=True)
    assert len(model.branch_sets) == k
    assert all(len(X) == lw.params.path_vertices for X in model.branch_sets)
    for (i, j), (u, v) in witnesses.items():
        assert lw.labels[u].index == 2 ** (k - i - 1 + g)


def test_linear_clique_model_g31_witness_indices():
    lw = build(LayeredWheelParams(1, 3))
    _, w = linear_clique_model(lw)
    idx = {pair: lw.labels[u].index for pair, (u, _) in w.items()}
    assert idx == {(0, 1): 8, (0, 2): 8, (1, 2): 4}


def test_contract_model_examples():
    C6 = cycle_graph(6)
    assert contract_model(C6, [[0, 1], [2, 3], [4, 5]]).graph == complete_graph(3)
    assert contract_model(path_graph(4), [[0, 1], [2], [3]]).graph == path_graph(3)
    with pytest.raises(ModelError):
        contract_model(C6, [[0, 1], [1, 2]])
    with pytest.raises(ModelError):
        contract_model(C6, [[0, 3]])


def test_contract_model_complete_cover():
    cm = contract_model(cycle_graph(5), [[3, 4]], complete_cover=True)
    assert cm.branch_sets == ((3, 4), (0,), (1,), (2,))
    assert cm.graph.n == 4 and cm.graph.m == 4


def test_all_singletons_is_isomorphic_copy():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 10)
        G = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.35])
        order = list(range(n))
        rng.shuffle(order)
        cm = contract_model(G, [[v] for v in order])
        assert sorted(cm.graph.degrees()) == sorted(G.degrees())
        assert nx.is_isomorphic(to_nx(cm.graph), to_nx(G))


def test_contract_matches_networkx_quotient():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(4, 10)
        G = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4])
        H = to_nx(G)
        # random connected blocks: grow from random seeds
        left, sets = set(range(n)), []
        while left:
            s = min(left)
            block = {s}
            for w in sorted(H.neighbors(s)):
                if w in left and rng.random() < 0.5:
                    block.add(w)
            left -= block
            sets.append(sorted(block))
        Q = nx.quotient_graph(H, [set(b) for b in sets], relabel=False)
        cm = contract_model(G, sets)
        ours = {frozenset((tuple(cm.branch_sets[u]), tuple(cm.branch_sets[v]))) for u, v in cm.graph.edges()}
        theirs = {frozenset((tuple(sorted(a)), tuple(sorted(b)))) for a, b in Q.edges()}
        assert ours == theirs


@pytest.mark.parametrize(
    "host,pattern,expected",
    [
        (cycle_graph(5), cycle_graph(4), True),
        (cycle_graph(4), complete_graph(3), True),
        (path_graph(5), complete_graph(3), False),
        (Graph(4, [(0, 1), (0, 2), (0, 3)]), Graph(3), True),  # three leaves of a star
        (cycle_graph(6), Graph(3, [(0, 1)]), True),
        (complete_graph(4), Graph(2), False),
    ],
)
def test_contains_induced_minor_examples(host, pattern, expected):
    res = contains_induced_minor(host, pattern)
    assert res.found is expected
    if expected:
        assert validate_model(res.model, require_induced=True)
    assert has_induced_minor(host, pattern) is expected


def test_contains_induced_minor_random_against_oracle():
    rng = random.Random(17)
    patterns = [complete_graph(3), cycle_graph(4), path_graph(4), Graph(4, [(0, 1), (2, 3)]), Graph(3)]
    for _ in range(60):
        n = rng.randint(3, 8)
        host = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.35])
        for P in patterns:
            assert contains_induced_minor(host, P).found is has_induced_minor(host, P)


def test_single_path_instance_has_no_triangle_minor():
    H = build(LayeredWheelParams(1, 1)).graph  # a path of length 4
    assert not contains_induced_minor(H, cycle_graph(3)).found


def test_contains_induced_minor_limits():
    with pytest.raises(ValueError):
        contains_induced_minor(path_graph(31), path_graph(2))
    with pytest.raises(ValueError):
        contains_induced_minor(path_graph(5), path_graph(7))
    res = contains_induced_minor(cycle_graph(12), complete_graph(4), budget=50)
    assert res.status == "budget_exceeded"


def test_budget_exceeded_is_not_a_no():
    # an exhausted search must not report "no"
    try:
        res = contains_induced_minor(cycle_graph(10), complete_graph(4), budget=5)
    except BudgetExceeded:  # pragma: no cover - the search reports, not raises
        pytest.fail("budget exhaustion should be reported as a status")
    assert res.status == "budget_exceeded" and res.model is None
