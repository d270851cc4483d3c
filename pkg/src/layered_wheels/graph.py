"""Immutable simple undirected graphs on dense integer ids.

Every other module in the package builds on :class:`Graph`.  Vertices are
``0..n-1``; "modifications" always return a new graph together with an
old-to-new id map so that certificates keep referring to stable ids.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    Neighbour lists are stored sorted and strictly ascending.  Instances are
    never mutated after construction, so they are safe to share between
    threads and to use as dictionary keys.
    """

    __slots__ = ("n", "adj", "_nbr_sets", "_m", "_hash", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2
        self._hash = None
        self._masks = None

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, row in enumerate(adjacency) for v in row if u < v]
        g = cls(len(adjacency), edges)
        for u, row in enumerate(adjacency):
            if set(row) != g._nbr_sets[u]:
                raise GraphError(f"adjacency is not symmetric at vertex {u}")
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def max_degree(self) -> int:
        return max((len(row) for row in self.adj), default=0)

    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets (cached)."""
        if self._masks is None:
            out = []
            for row in self.adj:
                bits = 0
                for v in row:
                    bits |= 1 << v
                out.append(bits)
            self._masks = tuple(out)
        return self._masks

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _valid_set(G: Graph, X: Iterable[int]) -> list[int]:
    members = sorted(set(X))
    for v in members:
        G.check_vertex(v)
    return members


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[X]`` and the bijection ``X -> range(|X|)``.

    New ids follow the sorted order of ``X``.
    """
    members = _valid_set(G, X)
    idmap = {v: i for i, v in enumerate(members)}
    edges = [
        (idmap[u], idmap[v])
        for u in members
        for v in G.adj[u]
        if u < v and v in idmap
    ]
    return Graph(len(members), edges), idmap


def delete_vertices(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G \\ X`` with the old-to-new id map of the surviving vertices."""
    gone = set(_valid_set(G, X))
    return induced_subgraph(G, (v for v in range(G.n) if v not in gone))


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return Graph(G.n, (e for e in G.edges() if e != (min(u, v), max(u, v))))


def bfs_distances(G: Graph, source: int, blocked: Iterable[int] = (), limit: int | None = None) -> dict[int, int]:
    """Distances from ``source`` avoiding ``blocked``; stops past ``limit``."""
    G.check_vertex(source)
    blocked = set(blocked)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in G.adj[u]:
            if w not in dist and w not in blocked:
                dist[w] = d + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> int | None:
    """BFS distance between ``u`` and ``v``; ``None`` when unreachable."""
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in G.adj[x]:
            if w not in dist:
                if w == v:
                    return dist[x] + 1
                dist[w] = dist[x] + 1
                queue.append(w)
    return None


def _bfs_avoiding_edge(G: Graph, u: int, v: int, bound: int) -> int | None:
    # distance u -> v in G - uv, abandoning once the distance reaches ``bound``
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        if d >= bound:
            return None
        for w in G.adj[x]:
            if x == u and w == v:
                continue
            if w == v:
                return d
            if w not in dist:
                dist[w] = d
                queue.append(w)
    return None


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest.

    Uses ``min over edges uv of 1 + dist_{G-uv}(u, v)``, pruning each BFS
    at the best cycle found so far.
    """
    best: int | None = None
    for u, v in G.edges():
        bound = best - 1 if best is not None else G.n
        d = _bfs_avoiding_edge(G, u, v, bound)
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
            if best == 3:
                break
    return best


def components(G: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex.

    With ``within`` the components of ``G[within]`` are returned (in the ids
    of ``G``).
    """
    allowed = None if within is None else set(within)
    seen: set[int] = set()
    out = []
    order = range(G.n) if allowed is None else sorted(allowed)
    for s in order:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for w in G.adj[x]:
                if w not in seen and (allowed is None or w in allowed):
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def is_connected(G: Graph, within: Iterable[int] | None = None) -> bool:
    """Whether ``G`` (or ``G[within]``) is connected; the empty graph is not."""
    comps = components(G, within)
    return len(comps) == 1


def is_triangle_free(G: Graph) -> bool:
    return find_triangle(G) is None


def find_triangle(G: Graph) -> tuple[int, int, int] | None:
    """Some triangle ``(u, v, w)`` with ``uv`` the least edge in one, or None."""
    for u, v in G.edges():
        common = G.neighbor_set(u) & G.neighbor_set(v)
        if common:
            return (u, v, min(common))
    return None


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """Whether ``seq`` lists the vertices of an induced path in order."""
    if len(set(seq)) != len(seq) or not seq:
        return False
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        for w in G.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) != 1:
                return False
        if i + 1 < len(seq) and not G.has_edge(v, seq[i + 1]):
            return False
    return True


def anticomplete(G: Graph, X: Iterable[int], Y: Iterable[int]) -> bool:
    """Disjoint with no edge between them."""
    X, Y = set(X), set(Y)
    if X & Y:
        return False
    return not any(G.neighbor_set(x) & Y for x in X)


def neighborhood(G: Graph, X: Iterable[int]) -> set[int]:
    """``N(X)``: vertices outside ``X`` with a neighbour in ``X``."""
    X = set(X)
    out: set[int] = set()
    for x in X:
        out.update(G.adj[x])
    return out - X


# -- small graph constructors used throughout tests and demos --------------


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def theta_graph(*lengths: int) -> Graph:
    """Two ends (ids 0 and 1) joined by internally disjoint paths.

    ``theta_graph(4, 4, 4)`` is the theta with three paths of length 4.
    """
    if any(L < 1 for L in lengths):
        raise GraphError("path lengths must be positive")
    edges = []
    nxt = 2
    for L in lengths:
        prev = 0
        for _ in range(L - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def wall_graph(k: int) -> Graph:
    """The elementary ``(k x k)``-wall.

    ``k`` rows of ``2k`` vertices; rungs join row ``r`` to row ``r+1`` at the
    columns ``c`` with ``c + r`` even, and the two corners left with degree
    one are removed.  The result has treewidth ``k`` for ``k >= 2``.
    """
    if k < 1:
        raise GraphError("wall size must be positive")
    width = 2 * k
    ids: dict[tuple[int, int], int] = {}
    rows = k
    keep = []
    for r in range(rows):
        for c in range(width):
            keep.append((r, c))
    edges_rc = []
    for r in range(rows):
        for c in range(width - 1):
            edges_rc.append(((r, c), (r, c + 1)))
    for r in range(rows - 1):
        for c in range(width):
            if (c + r) % 2 == 0:
                edges_rc.append(((r, c), (r + 1, c)))
    # trim dangling corner vertices (degree one) repeatedly
    deg: dict[tuple[int, int], int] = {v: 0 for v in keep}
    for a, b in edges_rc:
        deg[a] += 1
        deg[b] += 1
    alive = set(keep)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] <= 1:
                alive.discard(v)
                for a, b in edges_rc:
                    if a == v and b in alive:
                        deg[b] -= 1
                    elif b == v and a in alive:
                        deg[a] -= 1
                changed = True
    for v in sorted(alive):
        ids[v] = len(ids)
    return Graph(len(ids), [(ids[a], ids[b]) for a, b in edges_rc if a in alive and b in alive])
