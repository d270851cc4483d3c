"""Independent brute-force oracles used by the tests.

None of these call into the package's algorithms; they only read ``Graph``
adjacency or go through networkx.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import networkx as nx

from layered_wheels.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in H.edges()])


def atlas(max_n: int = 7, connected: bool = True) -> list[Graph]:
    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == 0 or H.number_of_nodes() > max_n:
            continue
        if connected and not nx.is_connected(H):
            continue
        out.append(from_nx(H))
    return out


# -- treewidth ---------------------------------------------------------------


def treewidth_dp(G: Graph) -> int:
    """Subset dynamic programme over elimination prefixes (n up to ~14)."""
    n = G.n
    if n == 0:
        return -1
    nbr = [set(G.adj[v]) for v in range(n)]

    def q(S: frozenset, v: int) -> int:
        # vertices outside S + v reachable from v through S
        seen, stack, out = {v}, [v], set()
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in seen:
                    continue
                seen.add(y)
                if y in S:
                    stack.append(y)
                else:
                    out.add(y)
        return len(out)

    @lru_cache(maxsize=None)
    def tw(S: frozenset) -> int:
        if not S:
            return -1
        return min(max(tw(S - {v}), q(S - {v}, v)) for v in S)

    return tw(frozenset(range(n)))


# -- girth -------------------------------------------------------------------


def girth_by_cycles(G: Graph):
    lengths = [len(c) for c in nx.simple_cycles(to_nx(G))]
    return min(lengths) if lengths else None


# -- canonical forms and induced minors ---------------------------------------


def canon(n: int, edges) -> tuple:
    """Canonical form of a small graph: least sorted edge list over degree-respecting relabellings."""
    edges = [tuple(e) for e in edges]
    nbr = [set() for _ in range(n)]
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    key = [(len(nbr[v]), tuple(sorted(len(nbr[w]) for w in nbr[v]))) for v in range(n)]
    classes = sorted(set(key))
    groups = [[v for v in range(n) if key[v] == c] for c in classes]
    best = None
    for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
        label, nxt = {}, 0
        for perm in perms:
            for v in perm:
                label[v] = nxt
                nxt += 1
        form = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges))
        if best is None or form < best:
            best = form
    return (n, best)


def _delete(n: int, edges: tuple, x: int):
    rel = lambda v: v - (v > x)  # noqa: E731
    return n - 1, tuple((rel(u), rel(v)) for u, v in edges if x not in (u, v))


def _contract(n: int, edges: tuple, a: int, b: int):
    # merge b into a, then drop b
    merged = set()
    for u, v in edges:
        u, v = (a if u == b else u), (a if v == b else v)
        if u != v:
            merged.add((min(u, v), max(u, v)))
    return _delete(n, tuple(sorted(merged)), b)


@lru_cache(maxsize=None)
def induced_minors(form: tuple, max_n: int) -> frozenset:
    """Canonical forms of every induced minor with at most ``max_n`` vertices."""
    n, edges = form
    out = {form} if n <= max_n else set()
    if n == 0:
        return frozenset(out)
    children = set()
    for x in range(n):
        children.add(canon(*_delete(n, edges, x)))
    for u, v in edges:
        children.add(canon(*_contract(n, edges, u, v)))
    for child in children:
        out |= induced_minors(child, max_n)
    return frozenset(out)


def has_induced_minor(host: Graph, pattern: Graph) -> bool:
    return canon(pattern.n, pattern.edges()) in induced_minors(canon(host.n, host.edges()), pattern.n)


# -- balanced separators -------------------------------------------------------


def heaviest_after(G: Graph, weights, X) -> Fraction:
    H = to_nx(G)
    H.remove_nodes_from(X)
    return max((sum((weights[v] for v in C), Fraction(0)) for C in nx.connected_components(H)), default=Fraction(0))


def min_balanced_separator_oracle(G: Graph, weights, cap: int):
    """Lexicographically least smallest ``X`` with every component of ``G - X`` of weight <= 1/2."""
    for size in range(cap + 1):
        for X in itertools.combinations(range(G.n), size):
            if heaviest_after(G, weights, X) <= Fraction(1, 2):
                return X
    return None


# -- crossing quadruples -------------------------------------------------------


def has_crossing(edges: set, order) -> bool:
    """Plain 4-subset scan for ``x1 < x2 < x3 < x4`` spanning exactly ``x1x3`` and ``x2x4``."""
    E = {frozenset(e) for e in edges}
    for quad in itertools.combinations(order, 4):
        present = {(i, j) for i, j in itertools.combinations(range(4), 2) if frozenset((quad[i], quad[j])) in E}
        if present == {(0, 2), (1, 3)}:
            return True
    return False


def witness_free_order(n: int, edges) -> tuple | None:
    """Prefix enumeration: a vertex is refused when, placed last so far, it completes a crossing as ``x4``."""
    E = {frozenset(e) for e in edges}
    adj = lambda a, b: frozenset((a, b)) in E  # noqa: E731
    order: list[int] = []

    def completes(x4: int) -> bool:
        for x2 in order:
            if not adj(x2, x4):
                continue
            p2 = order.index(x2)
            for i1 in range(p2):
                x1 = order[i1]
                if adj(x1, x2) or adj(x1, x4):
                    continue
                for x3 in order[p2 + 1 :]:
                    if adj(x1, x3) and not adj(x2, x3) and not adj(x3, x4):
                        return True
        return False

    def rec() -> bool:
        if len(order) == n:
            return True
        for v in range(n):
            if v in order or completes(v):
                continue
            order.append(v)
            if rec():
                return True
            order.pop()
        return False

    return tuple(order) if rec() else None
