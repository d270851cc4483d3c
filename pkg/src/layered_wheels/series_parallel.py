"""Series-parallel recognition and the big-vertex contraction ``H -> H'``.

A graph is series-parallel (treewidth at most two) exactly when repeatedly
deleting vertices of degree at most one and suppressing vertices of degree
two, merging any parallel edges this creates, empties it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .construction import LayeredSubgraph, LayeredWheel, VertexClass
from .graph import Graph, induced_subgraph, is_induced_path
from .models import ContractedModel, contract_model


@dataclass(frozen=True)
class SPResult:
    """Outcome of :func:`is_series_parallel`.

    ``trace`` lists the reductions applied: ``("delete", v)`` or
    ``("suppress", v, a, b, merged)`` where ``merged`` says the new edge
    ``ab`` coincided with an existing one.  On failure ``core`` is the
    irreducible remainder (minimum degree three), which contains a ``K_4``
    minor.
    """

    is_series_parallel: bool
    trace: tuple
    core: Graph | None = None
    core_vertices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.is_series_parallel


def is_series_parallel(G: Graph) -> SPResult:
    nbr = [set(row) for row in G.adj]
    alive = [True] * G.n
    left = G.n
    queue = deque(v for v in range(G.n) if len(nbr[v]) <= 2)
    trace = []
    while queue:
        v = queue.popleft()
        if not alive[v] or len(nbr[v]) > 2:
            continue
        alive[v] = False
        left -= 1
        ns = sorted(nbr[v])
        for w in ns:
            nbr[w].discard(v)
        nbr[v] = set()
        if len(ns) == 2:
            a, b = ns
            merged = b in nbr[a]
            nbr[a].add(b)
            nbr[b].add(a)
            trace.append(("suppress", v, a, b, merged))
        else:
            trace.append(("delete", v))
        for w in ns:
            if len(nbr[w]) <= 2:
                queue.append(w)
    if left == 0:
        return SPResult(True, tuple(trace))
    keep = [v for v in range(G.n) if alive[v]]
    idx = {v: i for i, v in enumerate(keep)}
    core = Graph(len(keep), ((idx[u], idx[w]) for u in keep for w in nbr[u] if u < w))
    return SPResult(False, tuple(trace), core, tuple(keep))


def is_two_terminal_series_parallel(G: Graph, s: int, t: int) -> bool:
    """Whether ``G`` is ``(s, t)``-series-parallel.

    Series reductions are applied at non-terminal vertices with exactly two
    neighbours and parallel edges merge on creation; the answer is yes iff
    a single ``st`` edge remains.
    """
    if s == t:
        raise ValueError("terminals must be distinct")
    nbr = [set(row) for row in G.adj]
    alive = [True] * G.n
    queue = deque(v for v in range(G.n) if v not in (s, t))
    while queue:
        v = queue.popleft()
        if not alive[v] or v in (s, t):
            continue
        if len(nbr[v]) < 2:
            return False
        if len(nbr[v]) > 2:
            continue
        a, b = sorted(nbr[v])
        alive[v] = False
        nbr[a].discard(v)
        nbr[b].discard(v)
        nbr[a].add(b)
        nbr[b].add(a)
        queue.extend((a, b))
    rest = [v for v in range(G.n) if alive[v]]
    return sorted(rest) == sorted((s, t)) and t in nbr[s]


# -- H -> H' -------------------------------------------------------------


@dataclass(frozen=True)
class HPrimeResult:
    """``H'`` together with its branch sets in ``H``.

    ``roots[i]`` is the big vertex ``b`` when node ``i`` is ``N_H^M[b]`` and
    ``None`` for the singleton nodes.  Nodes are ordered by least member.
    """

    h_prime: Graph
    branch_sets: tuple[tuple[int, ...], ...]
    roots: tuple[int | None, ...]

    def owner_map(self) -> dict[int, int]:
        return {v: i for i, X in enumerate(self.branch_sets) for v in X}

    def big_nodes(self) -> list[int]:
        return [i for i, r in enumerate(self.roots) if r is not None]


class MissingClassification(ValueError):
    pass


def medium_neighbourhood(H: Graph, classes: Sequence[VertexClass], b: int) -> list[int]:
    """``N_H^M[b]``: ``b`` with its medium neighbours in ``H``."""
    return [b] + [w for w in H.adj[b] if classes[w] is VertexClass.MEDIUM]


def contract_to_h_prime(H: Graph, classes: Sequence[VertexClass]) -> HPrimeResult:
    """Contract every big vertex of ``H`` together with its medium neighbours."""
    if len(classes) != H.n or any(c is None for c in classes):
        raise MissingClassification("every vertex of H needs a class")
    big_sets = [
        tuple(sorted(medium_neighbourhood(H, classes, b)))
        for b in range(H.n)
        if classes[b] is VertexClass.BIG
    ]
    covered = {v for X in big_sets for v in X}
    sets = big_sets + [(v,) for v in range(H.n) if v not in covered]
    sets.sort(key=lambda X: X[0])
    cm = contract_model(H, sets)
    roots = tuple(
        next((v for v in X if classes[v] is VertexClass.BIG), None) for X in cm.branch_sets
    )
    return HPrimeResult(cm.graph, cm.branch_sets, roots)


def h_prime_by_edge_contraction(H: Graph, classes: Sequence[VertexClass]) -> Graph:
    """``H'`` computed the other way: contract edges inside some ``N_H^M[b]`` one at a time.

    Used as an independent cross-check of :func:`contract_to_h_prime`; the
    result is relabelled so node ``i`` is the class with the ``i``-th least
    representative.
    """
    parent = list(range(H.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in range(H.n):
        if classes[b] is not VertexClass.BIG:
            continue
        for w in H.adj[b]:
            if classes[w] is VertexClass.MEDIUM:
                ra, rb = find(b), find(w)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(v) for v in range(H.n)})
    idx = {r: i for i, r in enumerate(reps)}
    edges = {
        (min(idx[find(u)], idx[find(v)]), max(idx[find(u)], idx[find(v)]))
        for u, v in H.edges()
        if find(u) != find(v)
    }
    return Graph(len(reps), edges)


# -- the two-terminal contraction c(F) --------------------------------------


@dataclass(frozen=True)
class TwoTerminalGraph:
    graph: Graph
    source: int
    sink: int

    def __post_init__(self):
        self.graph.check_vertex(self.source)
        self.graph.check_vertex(self.sink)
        if self.source == self.sink:
            raise ValueError("source and sink must differ")


class HypothesisError(ValueError):
    """The input to :func:`c_of_F` violates one of the three hypotheses."""

    def __init__(self, condition: str, message: str, witness=None):
        super().__init__(f"hypothesis ({condition}) violated: {message}")
        self.condition = condition
        self.witness = witness


@dataclass(frozen=True)
class CofFResult:
    c_of_f: TwoTerminalGraph
    model: ContractedModel
    b_prime: tuple[int, ...]
    s_prime: tuple[int, ...]
    n_prime: dict


def _classify_frame(F: TwoTerminalGraph, paths: Sequence[Sequence[int]]):
    G, s, t = F.graph, F.source, F.sink
    k = len(paths)
    if k == 0:
        raise HypothesisError("i", "no paths given")
    where: dict[int, int] = {}
    for i, P in enumerate(paths):
        if len(P) < 2 or P[0] != s or P[-1] != t:
            raise HypothesisError("i", f"path {i + 1} does not run from s to t", i)
        if not is_induced_path(G, P):
            raise HypothesisError("i", f"path {i + 1} is not an induced path", i)
        for v in P[1:-1]:
            if v in where:
                raise HypothesisError("i", f"interiors of paths {where[v] + 1} and {i + 1} meet at {v}", v)
            where[v] = i
    if set(where) | {s, t} != set(range(G.n)):
        missing = sorted(set(range(G.n)) - set(where) - {s, t})
        raise HypothesisError("i", "the paths do not cover V(F)", missing)

    on_path = [set(P) for P in paths]
    b_prime, s_prime = [], []
    n_prime: dict[int, tuple[int, ...]] = {}
    for v in sorted(where):
        i = where[v]
        outside = [w for w in G.adj[v] if w not in on_path[i]]
        hits: dict[int, list[int]] = {}
        for w in outside:
            hits.setdefault(where[w], []).append(w)
        fits = []
        if not outside:
            fits.append("S")
        if i < k - 1 and set(hits) == set(range(i + 1, k)) and all(len(h) == 1 for h in hits.values()):
            fits.append("B")
        if i > 0 and len(outside) == 1 and where[outside[0]] < i:
            fits.append("L")
        if len(fits) != 1:
            raise HypothesisError("ii", f"vertex {v} on path {i + 1} matches {len(fits)} of the three cases", v)
        if fits[0] == "S":
            s_prime.append(v)
        elif fits[0] == "B":
            b_prime.append(v)
            n_prime[v] = tuple(sorted([v] + outside))
    position = [{v: d for d, v in enumerate(P)} for P in paths]
    for i in range(k):
        on_i = sorted((position[i][v], v) for v in b_prime if where[v] == i)
        for (_, v1), (_, v2) in zip(on_i, on_i[1:]):
            for j in range(i + 1, k):
                u1 = next(w for w in G.adj[v1] if where.get(w) == j)
                u2 = next(w for w in G.adj[v2] if where.get(w) == j)
                if not position[j][u1] < position[j][u2]:
                    raise HypothesisError("iii", f"neighbours of {v1} and {v2} on path {j + 1} cross", (v1, v2, j + 1))
    return b_prime, s_prime, n_prime


def c_of_F(
    F: TwoTerminalGraph,
    paths: Sequence[Sequence[int]],
    b_prime: Sequence[int] | None = None,
) -> CofFResult:
    """Contract ``N'_F[v]`` for each ``v`` in ``B'(F)`` after checking the hypotheses.

    ``paths`` are the ``s``-``t`` paths ``P_1..P_k`` in order.  If ``b_prime``
    is given it must agree with the set computed from the paths.  The result
    is asserted to be ``(s, t)``-series-parallel.
    """
    found_b, s_prime, n_prime = _classify_frame(F, paths)
    if b_prime is not None and sorted(b_prime) != found_b:
        raise HypothesisError("ii", "given B' differs from the vertices meeting the second case", sorted(b_prime))
    sets = [n_prime[v] for v in found_b] + [(w,) for w in s_prime] + [(F.source,), (F.sink,)]
    sets.sort(key=lambda X: X[0])
    cm = contract_model(F.graph, sets)
    owner = cm.owner_map()
    c = TwoTerminalGraph(cm.graph, owner[F.source], owner[F.sink])
    if not is_series_parallel(c.graph) or not is_two_terminal_series_parallel(c.graph, c.source, c.sink):
        raise AssertionError("c(F) is not (s, t)-series-parallel")
    return CofFResult(c, cm, tuple(found_b), tuple(s_prime), n_prime)


def two_terminal_frame(lw: LayeredWheel, deleted: Sequence[int] = ()) -> tuple[TwoTerminalGraph, list[list[int]]]:
    """The frame ``F`` used to show ``H'`` is series-parallel for ``H = G - deleted``.

    Starting from ``G_k^g``, every edge between a deleted big vertex and a
    medium vertex is removed, and terminals ``s`` (joined to every
    ``P_l^0``) and ``t`` (joined to every last vertex of a path) are added.
    ``s`` and ``t`` get ids ``n`` and ``n + 1``.
    """
    G = lw.graph
    dropped_big = {b for b in deleted if lw.classes[b] is VertexClass.BIG}
    n = G.n
    s, t = n, n + 1
    edges = [
        (u, v)
        for u, v in G.edges()
        if not (
            (u in dropped_big and lw.classes[v] is VertexClass.MEDIUM)
            or (v in dropped_big and lw.classes[u] is VertexClass.MEDIUM)
        )
    ]
    paths = []
    for layer in range(1, lw.params.k + 1):
        P = lw.path(layer)
        edges.append((s, P[0]))
        edges.append((P[-1], t))
        paths.append([s] + P + [t])
    return TwoTerminalGraph(Graph(n + 2, edges), s, t), paths


def h_prime_of(sub: LayeredSubgraph) -> HPrimeResult:
    return contract_to_h_prime(sub.graph, sub.classes)


def induced_with_classes(H: Graph, classes: Sequence[VertexClass], keep) -> tuple[Graph, list[VertexClass]]:
    sub, idmap = induced_subgraph(H, keep)
    inv = sorted(idmap, key=idmap.get)
    return sub, [classes[v] for v in inv]
