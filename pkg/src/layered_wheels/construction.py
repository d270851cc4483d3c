"""The layered-wheel-like family ``G_k^g`` and its vertex classification.

``G_k^g`` consists of ``k`` index paths ``P_1..P_k``, each with
``2^(k+g) + 1`` vertices.  The vertex ``P_i^x`` is joined to ``P_j^x`` for
every ``j > i`` whenever ``x = b * 2^(k-i+g)`` with ``b`` odd.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, bfs_distances, find_triangle, girth, induced_subgraph
from .report import Check, Status

DEFAULT_VERTEX_CAP = 10**6


class InstanceTooLarge(ValueError):
    """The requested instance exceeds the vertex cap."""


class VertexClass(enum.Enum):
    BIG = "big"
    MEDIUM = "medium"
    SMALL = "small"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LayeredWheelParams:
    g: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.g, int) and isinstance(self.k, int)):
            raise TypeError("g and k must be integers")
        if self.g < 1 or self.k < 1:
            raise ValueError(f"need g >= 1 and k >= 1, got g={self.g}, k={self.k}")

    @property
    def path_length(self) -> int:
        return 2 ** (self.k + self.g)

    @property
    def path_vertices(self) -> int:
        return self.path_length + 1

    @property
    def num_vertices(self) -> int:
        return self.k * self.path_vertices

    @property
    def num_edges(self) -> int:
        k = self.k
        cross = sum(2 ** (i - 1) * (k - i) for i in range(1, k))
        return k * self.path_length + cross

    def vertex_id(self, layer: int, index: int) -> int:
        if not (1 <= layer <= self.k and 0 <= index <= self.path_length):
            raise ValueError(f"no vertex with layer {layer} and index {index}")
        return (layer - 1) * self.path_vertices + index

    def coords(self, v: int) -> "LayeredVertex":
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex id {v} out of range")
        layer, index = divmod(v, self.path_vertices)
        return LayeredVertex(layer + 1, index)

    def big_indices(self, layer: int) -> range:
        """Indices of the big vertices of ``P_layer``."""
        step = 2 ** (self.k - layer + self.g)
        return range(step, self.path_length, 2 * step)


@dataclass(frozen=True, order=True)
class LayeredVertex:
    layer: int
    index: int

    def __str__(self) -> str:
        return f"P_{self.layer}^{self.index}"


def two_adic_valuation(x: int) -> int:
    if x <= 0:
        raise ValueError("valuation is only defined for positive integers")
    return (x & -x).bit_length() - 1


def classify(params: LayeredWheelParams, v: LayeredVertex) -> VertexClass:
    """Big, medium or small, read off the 2-adic valuation of the index."""
    k, g = params.k, params.g
    if not (1 <= v.layer <= k and 0 <= v.index <= params.path_length):
        raise ValueError(f"{v} is not a vertex of G_{k}^{g}")
    if v.index in (0, params.path_length):
        return VertexClass.SMALL
    val = two_adic_valuation(v.index)
    own = k - v.layer + g
    if val == own:
        return VertexClass.BIG
    if own < val <= k - 1 + g:
        return VertexClass.MEDIUM
    return VertexClass.SMALL


@dataclass(frozen=True)
class LayeredWheel:
    """A built ``G_k^g`` with coordinates and classes for every vertex id."""

    params: LayeredWheelParams
    graph: Graph
    labels: tuple[LayeredVertex, ...]
    classes: tuple[VertexClass, ...]

    def id_of(self, layer: int, index: int) -> int:
        return self.params.vertex_id(layer, index)

    def vertices_of_class(self, cls: VertexClass) -> list[int]:
        return [v for v, c in enumerate(self.classes) if c is cls]

    @property
    def big(self) -> list[int]:
        return self.vertices_of_class(VertexClass.BIG)

    def path(self, layer: int) -> list[int]:
        return [self.id_of(layer, x) for x in range(self.params.path_vertices)]

    def induced(self, keep: Iterable[int]) -> "LayeredSubgraph":
        H, idmap = induced_subgraph(self.graph, keep)
        inverse = [0] * H.n
        for old, new in idmap.items():
            inverse[new] = old
        return LayeredSubgraph(
            parent=self,
            graph=H,
            origin=tuple(inverse),
            classes=tuple(self.classes[v] for v in inverse),
        )

    def whole(self) -> "LayeredSubgraph":
        return self.induced(range(self.graph.n))


@dataclass(frozen=True)
class LayeredSubgraph:
    """An induced subgraph ``H`` of a built ``G_k^g``.

    ``origin[v]`` is the id in the parent graph of the vertex ``v`` of ``H``;
    classes are inherited from the parent.
    """

    parent: LayeredWheel
    graph: Graph
    origin: tuple[int, ...]
    classes: tuple[VertexClass, ...]
    _back: dict = field(default=None, compare=False, repr=False)

    def local_id(self, parent_id: int) -> int | None:
        if self._back is None:
            object.__setattr__(self, "_back", {o: i for i, o in enumerate(self.origin)})
        return self._back.get(parent_id)

    def label(self, v: int) -> LayeredVertex:
        return self.parent.labels[self.origin[v]]

    def parent_degree(self, v: int) -> int:
        return self.parent.graph.degree(self.origin[v])


def check_cap(params: LayeredWheelParams, cap: int = DEFAULT_VERTEX_CAP) -> None:
    if params.num_vertices > cap:
        raise InstanceTooLarge(
            f"G_{params.k}^{params.g} has {params.num_vertices} vertices, above the cap of {cap}"
        )


def build(params: LayeredWheelParams, cap: int = DEFAULT_VERTEX_CAP) -> LayeredWheel:
    """Build ``G_k^g``; raises :class:`InstanceTooLarge` above ``cap`` vertices."""
    check_cap(params, cap)
    k, L = params.k, params.path_length
    width = params.path_vertices
    edges = []
    for layer in range(1, k + 1):
        base = (layer - 1) * width
        edges.extend((base + x, base + x + 1) for x in range(L))
    for i in range(1, k):
        for x in params.big_indices(i):
            u = (i - 1) * width + x
            edges.extend((u, (j - 1) * width + x) for j in range(i + 1, k + 1))
    graph = Graph(params.num_vertices, edges)
    labels = tuple(LayeredVertex(v // width + 1, v % width) for v in range(graph.n))
    classes = tuple(classify(params, lv) for lv in labels)
    return LayeredWheel(params, graph, labels, classes)


# -- invariants -------------------------------------------------------------


def expected_degree(params: LayeredWheelParams, v: LayeredVertex, cls: VertexClass) -> tuple[int, int]:
    """Inclusive degree range that the classification predicts for ``v``."""
    if cls is VertexClass.BIG:
        # cross edges go to every higher layer, none come from below
        return (params.k - v.layer + 2,) * 2
    if cls is VertexClass.MEDIUM:
        return (3, 3)
    return (1, 2) if v.index in (0, params.path_length) else (2, 2)


def _timed(name: str, claim: str, fn) -> Check:
    start = time.perf_counter()
    ok, witness = fn()
    ms = (time.perf_counter() - start) * 1000
    return Check(name, claim, Status.PASS if ok else Status.FAIL, witness, ms)


def verify_construction_invariants(lw: LayeredWheel) -> list[Check]:
    """Run every structural check on ``lw``; failures carry a counterexample."""
    params, G = lw.params, lw.graph
    deg = G.degrees()
    big = set(lw.big)
    dist_bound = 2**params.g

    def counts():
        ok = G.n == params.num_vertices and G.m == params.num_edges
        return ok, {"n": G.n, "m": G.m, "expected_n": params.num_vertices, "expected_m": params.num_edges}

    def triangle_free():
        t = find_triangle(G)
        return t is None, None if t is None else {"triangle": list(t)}

    def girth_bound():
        gi = girth(G)
        return gi is None or gi >= params.g, {"girth": gi}

    def adjacent_degrees():
        for u, v in G.edges():
            if (deg[u] > 3 and deg[v] > 3) or (u in big and v in big):
                return False, {"edge": [u, v], "degrees": [deg[u], deg[v]]}
        return True, None

    def far_pairs(vertices: Sequence[int], skip_adjacent: bool):
        vs = set(vertices)
        for u in sorted(vs):
            reach = bfs_distances(G, u, limit=dist_bound - 1)
            for w, d in reach.items():
                if w != u and w in vs:
                    if skip_adjacent and G.has_edge(u, w):
                        continue
                    return False, {"pair": [u, w], "distance": d}
        return True, {"bound": dist_bound, "vertices": len(vs)}

    def deg3_rule():
        for v in range(G.n):
            if deg[v] == 3:
                heavy = [w for w in G.adj[v] if deg[w] >= 3]
                if len(heavy) > 1:
                    return False, {"vertex": v, "heavy_neighbours": heavy}
        return True, None

    def degree_formulas():
        for v in range(G.n):
            lo, hi = expected_degree(params, lw.labels[v], lw.classes[v])
            if not lo <= deg[v] <= hi:
                return False, {"vertex": str(lw.labels[v]), "class": str(lw.classes[v]), "degree": deg[v]}
        return True, None

    return [
        _timed("vertex-edge-counts", "closed forms for |V| and |E|", counts),
        _timed("triangle-free", "G_k^g is triangle-free", triangle_free),
        _timed("girth", "girth at least g", girth_bound),
        _timed("adjacent-degrees", "adjacent vertices: one has degree <= 3, not both big", adjacent_degrees),
        _timed("big-distance", "distinct big vertices at distance >= 2^g", lambda: far_pairs(sorted(big), False)),
        _timed(
            "degree4-distance",
            "non-adjacent degree >= 4 vertices at distance >= 2^g",
            lambda: far_pairs([v for v in range(G.n) if deg[v] >= 4], True),
        ),
        _timed("degree3-neighbours", "degree-3 vertex has <= 1 neighbour of degree >= 3", deg3_rule),
        _timed("degree-formulas", "big k-l+2 (interior, l<k), medium 3, small <= 2", degree_formulas),
    ]

