"""Thetas, anticomplete path families, crossing patterns and three-vertex connectors."""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bfs_distances, components, find_triangle, induced_subgraph, is_induced_path, theta_graph
from .models import ModelCheck
from .search import Budget, BudgetExceeded
from .series_parallel import medium_neighbourhood


class ThetaError(ValueError):
    """A precondition on a theta or connector input does not hold."""


@dataclass(frozen=True)
class ThetaCertificate:
    """Ends ``a``, ``b`` and internally anticomplete induced paths between them.

    Three paths make a theta; more make a wide theta.  ``length`` is the
    distance between the ends inside the theta, i.e. the shortest path.
    """

    a: int
    b: int
    paths: tuple[tuple[int, ...], ...]
    length: int

    @classmethod
    def of(cls, paths: Sequence[Sequence[int]]) -> "ThetaCertificate":
        paths = tuple(tuple(P) for P in paths)
        return cls(paths[0][0], paths[0][-1], paths, min(len(P) for P in paths) - 1)

    @property
    def width(self) -> int:
        return len(self.paths)

    def vertices(self) -> list[int]:
        return sorted({v for P in self.paths for v in P})

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for P in self.paths for u, v in zip(P, P[1:])})

    def graph(self) -> tuple[Graph, list[int]]:
        """The theta as a standalone graph, with the host id of each of its vertices."""
        vs = self.vertices()
        idx = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), [(idx[u], idx[v]) for u, v in self.edges()]), vs

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "length": self.length, "paths": [list(P) for P in self.paths]}


def standard_theta(*lengths: int) -> tuple[Graph, ThetaCertificate]:
    """:func:`~layered_wheels.graph.theta_graph` together with its own certificate."""
    G = theta_graph(*lengths)
    paths, nxt = [], 2
    for L in lengths:
        paths.append((0, *range(nxt, nxt + L - 1), 1))
        nxt += L - 1
    return G, ThetaCertificate.of(paths)


def validate_theta(G: Graph, T: ThetaCertificate, width: int | None = 3) -> ModelCheck:
    """Independent check that ``T`` is an induced (wide) theta of ``G``."""
    if width is not None and T.width != width:
        return ModelCheck(False, "width", (T.width, width))
    if T.width < 2:
        return ModelCheck(False, "width", (T.width,))
    if T.a == T.b or G.has_edge(T.a, T.b):
        return ModelCheck(False, "ends", (T.a, T.b))
    for i, P in enumerate(T.paths):
        if P[0] != T.a or P[-1] != T.b:
            return ModelCheck(False, "ends", (i,))
        if len(P) < 3:
            return ModelCheck(False, "short", (i, len(P) - 1))
        if not is_induced_path(G, P):
            return ModelCheck(False, "induced-path", (i,))
    interiors = [set(P[1:-1]) for P in T.paths]
    for i, j in itertools.combinations(range(T.width), 2):
        if interiors[i] & interiors[j]:
            return ModelCheck(False, "disjoint", (i, j))
        for x in interiors[i]:
            if G.neighbor_set(x) & interiors[j]:
                return ModelCheck(False, "anticomplete", (i, j, x))
    vs = T.vertices()
    sub, _ = induced_subgraph(G, vs)
    if sub.m != len(T.edges()):
        return ModelCheck(False, "chord", (sub.m, len(T.edges())))
    tg, host = T.graph()
    dist = bfs_distances(tg, host.index(T.a)).get(host.index(T.b))
    if dist != T.length:
        return ModelCheck(False, "length", (T.length, dist))
    return ModelCheck(True)


# -- long thetas -------------------------------------------------------------


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "none" | "budget_exceeded"
    certificate: object = None
    nodes: int = 0


def _induced_paths(G: Graph, u: int, v: int, allowed: set[int], budget: Budget, min_length: int = 1, first=None):
    """Induced ``u``-``v`` paths whose interior lies in ``allowed``, in DFS order.

    ``first`` restricts the second vertex.  A partial path is abandoned as
    soon as ``v`` becomes unreachable from its tip.
    """
    adj = G.adj
    path = [u]

    def reach(x: int, forbidden: set[int]) -> bool:
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z == v:
                    return True
                if z not in seen and z in allowed and z not in forbidden:
                    seen.add(z)
                    stack.append(z)
        return False

    def rec():
        budget.tick()
        x = path[-1]
        if x != u and G.has_edge(x, v):
            # an induced path through x must end at v right away
            if len(path) >= min_length:
                yield path + [v]
            return
        prev_nb = set()
        for y in path[:-1]:
            prev_nb.update(adj[y])
        nbrs = adj[x] if (x != u or first is None) else [first]
        for y in nbrs:
            if y == v:
                if len(path) >= min_length:
                    yield path + [v]
                continue
            if y not in allowed or y in path or y in prev_nb:
                continue
            forbidden = prev_nb | set(adj[x]) | set(path)
            forbidden.discard(y)
            if not reach(y, forbidden):
                continue
            path.append(y)
            yield from rec()
            path.pop()

    if u == v:
        return
    if G.has_edge(u, v):
        if min_length <= 1 and (first is None or first == v):
            yield [u, v]
        return
    yield from rec()


def find_long_theta(G: Graph, min_length: int, budget: int | None = None) -> SearchOutcome:
    """First induced theta of length at least ``min_length``, by ends then paths.

    Ends are tried as non-adjacent pairs ``a < b``; the three paths are taken
    in increasing order of their second vertex.
    """
    if min_length < 2:
        raise ThetaError("min_length must be at least 2")
    counter = Budget(budget)
    try:
        for a in range(G.n):
            if G.degree(a) < 3:
                continue
            dist = bfs_distances(G, a)
            for b in range(a + 1, G.n):
                if G.degree(b) < 3 or b not in dist or dist[b] < 2:
                    continue
                found = _theta_at(G, a, b, min_length, counter)
                if found is not None:
                    cert = ThetaCertificate.of(found)
                    check = validate_theta(G, cert)
                    if not check:
                        raise AssertionError(f"search produced an invalid theta: {check}")
                    return SearchOutcome("found", cert, counter.used)
    except BudgetExceeded:
        return SearchOutcome("budget_exceeded", None, counter.used)
    return SearchOutcome("none", None, counter.used)


def _theta_at(G: Graph, a: int, b: int, min_length: int, counter: Budget):
    everything = set(range(G.n)) - {a, b}

    def rec(chosen: list[list[int]], allowed: set[int], after: int):
        if len(chosen) == 3:
            return chosen
        for s in G.adj[a]:
            if s <= after or s not in allowed:
                continue
            for P in _induced_paths(G, a, b, allowed, counter, min_length, first=s):
                inner = set(P[1:-1])
                shadow = set(inner)
                for x in inner:
                    shadow.update(G.adj[x])
                found = rec(chosen + [P], allowed - shadow, s)
                if found:
                    return found
        return None

    return rec([], everything, -1)


# -- anticomplete path families ----------------------------------------------


@dataclass(frozen=True)
class PathFamily:
    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]
    exhaustive: bool
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.paths)


def validate_family(G: Graph, fam: PathFamily) -> ModelCheck:
    for i, P in enumerate(fam.paths):
        if P[0] != fam.u or P[-1] != fam.v or not is_induced_path(G, P):
            return ModelCheck(False, "path", (i,))
    inner = [set(P[1:-1]) for P in fam.paths]
    for i, j in itertools.combinations(range(len(inner)), 2):
        if inner[i] & inner[j]:
            return ModelCheck(False, "disjoint", (i, j))
        if any(G.neighbor_set(x) & inner[j] for x in inner[i]):
            return ModelCheck(False, "anticomplete", (i, j))
    return ModelCheck(True)


def disjoint_paths_bound(G: Graph, u: int, v: int, allowed: set[int], limit: int) -> int:
    """Internally vertex-disjoint ``u``-``v`` paths through ``allowed``, counted up to ``limit``.

    Unit-capacity augmenting paths on the vertex-split network.
    """
    if G.has_edge(u, v):
        return min(1, limit)
    cap: dict[tuple, int] = {}
    out: dict[tuple, list] = defaultdict(list)

    def arc(a, b):
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = 1

    nodes = set(allowed) | {u, v}
    for x in allowed:
        arc((x, 0), (x, 1))
    for x in nodes:
        if x == v:
            continue
        for y in G.adj[x]:
            if y in nodes and y != u:
                arc((x, 1), (y, 0))
    source, sink = (u, 1), (v, 0)
    count = 0
    while count < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        count += 1
    return count


def max_anticomplete_path_family(
    G: Graph, u: int, v: int, cap: int = 8, budget: int | None = None
) -> PathFamily:
    """A largest family of pairwise internally anticomplete induced ``u``-``v`` paths.

    Paths are chosen in increasing order of second vertex.  A branch is cut
    when the disjoint-path bound of what is still usable cannot beat the
    best family so far.  The search stops early once ``cap`` paths are found.
    """
    if u == v:
        raise ThetaError("u and v must differ")
    G.check_vertex(u)
    G.check_vertex(v)
    counter = Budget(budget)
    best: list[list[int]] = []

    def rec(chosen: list[list[int]], allowed: set[int], after: int):
        nonlocal best
        if len(chosen) > len(best):
            best = [list(P) for P in chosen]
        if len(best) >= cap:
            return True
        need = len(best) + 1 - len(chosen)
        if disjoint_paths_bound(G, u, v, allowed, need) < need:
            return False
        for s in G.adj[u]:
            if s <= after or (s not in allowed and s != v):
                continue
            for P in _induced_paths(G, u, v, allowed, counter, 1, first=s):
                inner = set(P[1:-1])
                shadow = set(inner)
                for x in inner:
                    shadow.update(G.adj[x])
                before = len(best)
                if rec(chosen + [P], allowed - shadow, s):
                    return True
                if len(best) > before:
                    need = len(best) + 1 - len(chosen)
                    if disjoint_paths_bound(G, u, v, allowed, need) < need:
                        return False
        return False

    allowed = set(range(G.n)) - {u, v}
    try:
        rec([], allowed, -1)
        exhaustive = True
    except BudgetExceeded:
        exhaustive = False
    fam = PathFamily(u, v, tuple(tuple(P) for P in best), exhaustive, counter.used)
    check = validate_family(G, fam)
    if not check:
        raise AssertionError(f"search produced an invalid family: {check}")
    return fam


def find_wide_theta(G: Graph, m: int, budget: int | None = None) -> SearchOutcome:
    """Two non-adjacent ends joined by ``m`` internally anticomplete paths."""
    if m < 2:
        raise ThetaError("width must be at least 2")
    counter = Budget(budget)
    used = 0
    for a in range(G.n):
        if G.degree(a) < m:
            continue
        for b in range(a + 1, G.n):
            if G.degree(b) < m or G.has_edge(a, b):
                continue
            fam = max_anticomplete_path_family(G, a, b, cap=m, budget=counter.limit - used)
            used += fam.nodes
            if not fam.exhaustive and fam.size < m:
                return SearchOutcome("budget_exceeded", None, used)
            if fam.size >= m:
                cert = ThetaCertificate.of(fam.paths[:m])
                check = validate_theta(G, cert, width=m)
                if not check:
                    raise AssertionError(f"search produced an invalid wide theta: {check}")
                return SearchOutcome("found", cert, used)
    return SearchOutcome("none", None, used)


# -- crossing pattern ----------------------------------------------------------


@dataclass(frozen=True)
class CrossingWitness:
    """Four vertices ``x1 < x2 < x3 < x4`` in ``order`` spanning exactly ``x1x3`` and ``x2x4``."""

    order: tuple[int, ...]
    quad: tuple[int, int, int, int]

    def to_dict(self) -> dict:
        return {"quad": list(self.quad)}


def validate_crossing(edges: set[tuple[int, int]], w: CrossingWitness) -> ModelCheck:
    pos = {v: i for i, v in enumerate(w.order)}
    x = w.quad
    if len(set(x)) != 4 or any(v not in pos for v in x):
        return ModelCheck(False, "vertices", x)
    if not pos[x[0]] < pos[x[1]] < pos[x[2]] < pos[x[3]]:
        return ModelCheck(False, "order", x)
    present = {(i, j) for i, j in itertools.combinations(range(4), 2) if (min(x[i], x[j]), max(x[i], x[j])) in edges}
    if present != {(0, 2), (1, 3)}:
        return ModelCheck(False, "edges", tuple(sorted(present)))
    return ModelCheck(True)


def _edge_set(T: ThetaCertificate) -> set[tuple[int, int]]:
    return set(T.edges())


def crossing_witness(T: ThetaCertificate, order: Sequence[int]) -> CrossingWitness | None:
    """A crossing quadruple of ``T`` under ``order``; ``None`` would falsify the non-outerstring claim.

    Scans pairs of edges ``x1x3``, ``x2x4`` that interleave in the order and
    span no other edge; returns the one with the lexicographically least positions.
    """
    if T.length < 4:
        raise ThetaError(f"crossing witnesses need a theta of length at least 4, got {T.length}")
    order = tuple(order)
    if sorted(order) != T.vertices():
        raise ThetaError("order must list every vertex of the theta exactly once")
    pos = {v: i for i, v in enumerate(order)}
    edges = _edge_set(T)
    ordered = sorted((pos[a], pos[b]) if pos[a] < pos[b] else (pos[b], pos[a]) for a, b in edges)
    edge_pos = set(ordered)
    best = None
    for p1, p3 in ordered:
        for p2, p4 in ordered:
            if not p1 < p2 < p3 < p4:
                continue
            if {(p1, p2), (p1, p4), (p2, p3), (p3, p4)} & edge_pos:
                continue
            cand = (p1, p2, p3, p4)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    w = CrossingWitness(order, tuple(order[p] for p in best))
    check = validate_crossing(edges, w)
    if not check:
        raise AssertionError(f"scan produced an invalid crossing witness: {check}")
    return w


@dataclass(frozen=True)
class AllOrdersResult:
    """Outcome of checking every linear order of a theta's vertices."""

    vertices: int
    orders_checked: int  # full orders examined one by one (0 for the pruned search)
    nodes: int
    falsifier: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.falsifier is None


def all_orders_by_enumeration(T: ThetaCertificate) -> AllOrdersResult:
    """Run :func:`crossing_witness` on every permutation of ``V(T)``."""
    vs = T.vertices()
    count = 0
    for order in itertools.permutations(vs):
        count += 1
        if crossing_witness(T, order) is None:
            return AllOrdersResult(len(vs), count, count, order)
    return AllOrdersResult(len(vs), count, count, None)


def _first_vertex_orbits(T: ThetaCertificate, host: list[int]) -> list[int]:
    """One local vertex per orbit of the theta's symmetries (path swaps, end swap)."""
    idx = {v: i for i, v in enumerate(host)}
    lengths = [len(P) - 1 for P in T.paths]
    seen, reps = set(), []
    for v in host:
        if v in seen:
            continue
        reps.append(idx[v])
        if v in (T.a, T.b):
            seen.update((T.a, T.b))
            continue
        i, p = next((i, P.index(v)) for i, P in enumerate(T.paths) if v in P[1:-1])
        for j, P in enumerate(T.paths):
            if lengths[j] == lengths[i]:
                seen.update((P[p], P[lengths[j] - p]))
    return reps


def all_orders_by_search(T: ThetaCertificate, budget: int | None = None) -> AllOrdersResult:
    """Search for an order with no crossing quadruple, placing vertices left to right.

    A prefix is dropped once some placed ``x2`` is straddled by a placed
    edge ``x1x3`` (``x1 < x2 < x3``, neither end adjacent to ``x2``) while a
    still unplaced neighbour ``x4`` of ``x2`` is adjacent to neither end:
    wherever ``x4`` goes it lands last and completes the quadruple.  Prefixes
    that agree on everything later quadruples can see are explored once, and
    the first vertex only ranges over orbits of the theta's symmetries.
    Reaching a full order would falsify the claim.  Covers all ``|V(T)|!`` orders.
    """
    if T.length < 4:
        raise ThetaError(f"crossing witnesses need a theta of length at least 4, got {T.length}")
    tg, host = T.graph()
    return _orders_search(tg, host, _first_vertex_orbits(T, host), budget)


def _orders_search(tg: Graph, host: list[int], first: Sequence[int], budget: int | None) -> AllOrdersResult:
    n = tg.n
    masks = tg.masks()
    edges = list(tg.edges())
    counter = Budget(budget)
    pos = [-1] * n
    order: list[int] = []
    strad = [0] * n  # bitmask of edge indices straddling each placed vertex
    # vertices that can play x2 (or x4) against each edge: adjacent to neither end
    free_of = [~(masks[a] | masks[b]) & ~((1 << a) | (1 << b)) for a, b in edges]
    incident = [[(i, a if b == v else b) for i, (a, b) in enumerate(edges) if v in (a, b)] for v in range(n)]
    dead: set[tuple] = set()
    leaving: list[int] = []  # edges with one placed end, by that end's position

    def place(v: int):
        p = len(order)
        pos[v] = p
        order.append(v)
        log = []
        doomed = False
        for i, a in incident[v]:
            if pos[a] < 0:
                continue
            bit = 1 << i
            for x2 in order[pos[a] + 1 : p]:
                strad[x2] |= bit
                log.append((x2, bit))
                if not doomed and free_of[i] >> x2 & 1:
                    doomed = any(pos[w] < 0 and free_of[i] >> w & 1 for w in tg.adj[x2])
        return log, doomed

    def unplace(v: int, log) -> None:
        for x2, bit in log:
            strad[x2] &= ~bit
        order.pop()
        pos[v] = -1

    def key() -> tuple:
        # what later quadruples can see: the placed set, the edges straddling
        # each placed vertex that still has unplaced neighbours, and the order
        # in which edges leaving the placed set start
        placed = 0
        for v in order:
            placed |= 1 << v
        sig = tuple(strad[x] if pos[x] >= 0 and any(pos[w] < 0 for w in tg.adj[x]) else 0 for x in range(n))
        return placed, sig, tuple(leaving)

    def rec(choices) -> bool:
        counter.tick()
        if len(order) == n:
            return True
        k = key()
        if k in dead:
            return False
        for v in choices:
            if pos[v] >= 0:
                continue
            log, doomed = place(v)
            if not doomed:
                saved = list(leaving)
                leaving[:] = [i for i in leaving if v not in edges[i]]
                leaving.extend(i for i, a in incident[v] if pos[a] < 0)
                ok = rec(range(n))
                leaving[:] = saved
                if ok:
                    return True
            unplace(v, log)
        dead.add(k)
        return False

    found = rec(first)
    return AllOrdersResult(n, 0, counter.used, tuple(host[v] for v in order) if found else None)


# -- three-vertex connectors --------------------------------------------------


@dataclass(frozen=True)
class ConnectorOutcome:
    """How a minimal connector of ``x1, x2, x3`` looks.

    ``case`` is ``"path"`` for the path-or-hole outcome (with ``ends`` the
    pair ``(xi, xj)``, ``third`` the remaining vertex and ``route`` the path
    or hole through ``F``) and ``"tripod"`` for the outcome with centre ``a``
    and legs ``legs[i]`` from ``a`` to ``xi``.  ``"neither"`` would falsify
    the dichotomy.
    """

    case: str
    F: tuple[int, ...]
    a: int | None = None
    legs: tuple[tuple[int, ...], ...] = ()
    ends: tuple[int, int] | None = None
    third: int | None = None
    route: tuple[int, ...] = ()


def _sees_all(T: Graph, F: Sequence[int], xs: Sequence[int]) -> bool:
    Fs = set(F)
    return all(T.neighbor_set(x) & Fs for x in xs)


def minimal_connector_set(T: Graph, xs: Sequence[int]) -> list[int]:
    """An inclusion-minimal connected ``F`` avoiding ``xs`` that sees each of them.

    Starts from the first component of ``T - xs`` that sees all three and
    deletes vertices smallest id first while something still sees all three.
    """
    rest = [v for v in range(T.n) if v not in xs]
    F = next((C for C in components(T, rest) if _sees_all(T, C, xs)), None)
    if F is None:
        raise ThetaError("no component of T minus the three vertices sees all of them")
    # one pass is enough: a vertex that cannot go now cannot go from a subset later
    for x in sorted(F):
        if x not in F:
            continue
        left = [y for y in F if y != x]
        keep = next((C for C in components(T, left) if _sees_all(T, C, xs)), None)
        if keep is not None:
            F = keep
    for x in F:
        left = [y for y in F if y != x]
        if any(_sees_all(T, C, xs) for C in components(T, left)):
            raise AssertionError("connector is not minimal")
    return sorted(F)


def _tree_path(T: Graph, F: set[int], src: int, dst: int) -> list[int] | None:
    parent = {src: None}
    queue = [src]
    for x in queue:
        if x == dst:
            break
        for y in T.adj[x]:
            if y in F and y not in parent:
                parent[y] = x
                queue.append(y)
    if dst not in parent:
        return None
    out = [dst]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out[::-1]


def _as_tripod(T: Graph, F: list[int], xs: Sequence[int]) -> ConnectorOutcome | None:
    Fs = set(F)
    attach = []
    for x in xs:
        hit = sorted(T.neighbor_set(x) & Fs)
        if len(hit) != 1:
            return None
        attach.append(hit[0])
    for a in F:
        legs = []
        for x, h in zip(xs, attach):
            P = _tree_path(T, Fs, a, h)
            if P is None:
                break
            legs.append(tuple(P + [x]))
        else:
            if _tripod_ok(T, F, xs, a, legs):
                return ConnectorOutcome("tripod", tuple(F), a=a, legs=tuple(legs))
    return None


def _tripod_ok(T: Graph, F: list[int], xs, a: int, legs) -> bool:
    covered = set().union(*(set(P) for P in legs)) - set(xs)
    if covered != set(F):
        return False
    tails = [set(P) - {a} for P in legs]
    for i, j in itertools.combinations(range(3), 2):
        if tails[i] & tails[j]:
            return False
    for P in legs:
        if not is_induced_path(T, P):
            return False
    for i, j in itertools.combinations(range(3), 2):
        for p in tails[i]:
            for q in T.neighbor_set(p) & tails[j]:
                if {p, q} != {xs[i], xs[j]}:
                    return False
    return True


def _as_path(T: Graph, F: list[int], xs: Sequence[int]) -> ConnectorOutcome | None:
    Fs = set(F)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        xi, xj, xk = xs[i], xs[j], xs[k]
        hi = sorted(T.neighbor_set(xi) & Fs)
        hj = sorted(T.neighbor_set(xj) & Fs)
        if len(hi) != 1 or len(hj) != 1:
            continue
        P = _tree_path(T, Fs, hi[0], hj[0])
        if P is None or set(P) != Fs:
            continue
        route = [xi] + P + [xj]
        if T.has_edge(xi, xj):
            sub, _ = induced_subgraph(T, route)
            if not (sub.m == len(route) and all(d == 2 for d in sub.degrees())):
                continue
        elif not is_induced_path(T, route):
            continue
        nk = sorted(T.neighbor_set(xk) & Fs)
        if any(not T.has_edge(p, q) for p, q in itertools.combinations(nk, 2)):
            return ConnectorOutcome("path", tuple(F), ends=(xi, xj), third=xk, route=tuple(route))
    return None


def minimal_connector(T: Graph, v1: int, v2: int, v3: int) -> ConnectorOutcome:
    """Classify a minimal connected set seeing ``v1, v2, v3`` in a triangle-free graph."""
    xs = (v1, v2, v3)
    if len(set(xs)) != 3:
        raise ThetaError("the three vertices must be distinct")
    for x in xs:
        T.check_vertex(x)
    tri = find_triangle(T)
    if tri is not None:
        raise ThetaError(f"graph has a triangle {tri}")
    F = minimal_connector_set(T, xs)
    return _as_tripod(T, F, xs) or _as_path(T, F, xs) or ConnectorOutcome("neither", tuple(F))


# -- theta extraction from a separator pipeline --------------------------------


@dataclass(frozen=True)
class ExtractionResult:
    """``status`` is ``"degree-bound"``, ``"theta"`` or ``"falsified"``."""

    status: str
    certificate: ThetaCertificate | None = None
    detail: dict | None = None


def extract_long_theta_from_pipeline(state, g: int | None = None) -> ExtractionResult:
    """Either ``H''`` has maximum degree below 9, or build a long theta in ``H``.

    Follows the degree argument: a ``D`` node of degree at least 9 sees three
    medium neighbours ``n1, n2, n3`` of one separator big vertex ``b``; a
    minimal connector of them inside ``D`` that is a tripod with centre ``a``
    gives a theta with ends ``a`` and ``b``.  Every other turn of events is
    returned as a falsification with its evidence.
    """
    H, H2 = state.H, state.h2.graph
    if H2.n == 0 or H2.max_degree() < 9:
        return ExtractionResult("degree-bound", detail={"max_degree": H2.max_degree() if H2.n else 0})
    n_ids = set(state.n_side)
    D = next((x for x in state.d_side if H2.degree(x) >= 9), None)
    if D is None:
        x = next(x for x in range(H2.n) if H2.degree(x) >= 9)
        return ExtractionResult("falsified", detail={"reason": "an N node has degree at least 9", "node": x})
    d_set = set(state.h2.branch_sets[D])
    node_of = {state.h2.branch_sets[x][0]: x for x in n_ids}
    for b in state.y_big:
        ns = [n for n in medium_neighbourhood(H, state.classes, b)[1:] if H2.has_edge(D, node_of[n])]
        if len(ns) >= 3:
            break
    else:
        return ExtractionResult("falsified", detail={"reason": "no big vertex sends three edges to D", "D": D})
    ns = ns[:3]
    keep = sorted(d_set | set(ns))
    T, idmap = induced_subgraph(H, keep)
    back = {new: old for old, new in idmap.items()}
    outcome = minimal_connector(T, *(idmap[n] for n in ns))
    detail = {"b": b, "n": ns, "D": D, "connector": [back[x] for x in outcome.F], "case": outcome.case}
    if outcome.case != "tripod":
        return ExtractionResult("falsified", detail=detail)
    paths = [[back[x] for x in leg] + [b] for leg in outcome.legs]
    cert = ThetaCertificate.of(paths)
    check = validate_theta(H, cert)
    if not check:
        detail["invalid"] = [check.condition, list(check.witness)]
        return ExtractionResult("falsified", cert, detail)
    if g is not None and cert.length < 2**g - 1:
        detail["short"] = cert.length
        return ExtractionResult("falsified", cert, detail)
    return ExtractionResult("theta", cert, detail)
