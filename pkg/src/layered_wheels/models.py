"""Branch-set models, their contraction, and a brute-force induced-minor test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .construction import LayeredWheel
from .graph import Graph, complete_graph, is_connected, is_induced_path
from .search import Budget, BudgetExceeded, iter_bits


class ModelError(ValueError):
    """Branch sets that cannot form a model (overlapping, disconnected, out of range)."""


@dataclass(frozen=True)
class Model:
    """Disjoint branch sets ``X_1..X_n`` in ``host`` realising ``pattern``.

    ``branch_sets[i]`` stands for vertex ``i`` of ``pattern``.
    """

    host: Graph
    branch_sets: tuple[tuple[int, ...], ...]
    pattern: Graph

    @classmethod
    def of(cls, host: Graph, sets: Iterable[Iterable[int]], pattern: Graph) -> "Model":
        return cls(host, tuple(tuple(sorted(set(s))) for s in sets), pattern)


@dataclass(frozen=True)
class ModelCheck:
    ok: bool
    condition: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def _touching(host: Graph, X: Iterable[int], Y: set[int]) -> tuple[int, int] | None:
    for x in X:
        hit = host.neighbor_set(x) & Y
        if hit:
            return (x, min(hit))
    return None


def validate_model(m: Model, require_linear: bool = False, require_induced: bool = False) -> ModelCheck:
    """Check the model conditions; on failure name the first one violated.

    Conditions are checked in the order: ``range``, ``connected``,
    ``disjoint``, ``edges``, then ``linear`` and ``induced`` if requested.
    """
    host, sets = m.host, m.branch_sets
    if len(sets) != m.pattern.n:
        return ModelCheck(False, "size", (len(sets), m.pattern.n))
    for i, X in enumerate(sets):
        for v in X:
            if not 0 <= v < host.n:
                return ModelCheck(False, "range", (i, v))
    for i, X in enumerate(sets):
        if not X or not is_connected(host, X):
            return ModelCheck(False, "connected", (i,))
    owner: dict[int, int] = {}
    for i, X in enumerate(sets):
        for v in X:
            if v in owner:
                return ModelCheck(False, "disjoint", (owner[v], i, v))
            owner[v] = i
    as_sets = [set(X) for X in sets]
    for i, j in m.pattern.edges():
        if _touching(host, sets[i], as_sets[j]) is None:
            return ModelCheck(False, "edges", (i, j))
    if require_linear:
        for i, X in enumerate(sets):
            if _path_order(host, X) is None:
                return ModelCheck(False, "linear", (i,))
    if require_induced:
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if not m.pattern.has_edge(i, j):
                    hit = _touching(host, sets[i], as_sets[j])
                    if hit is not None:
                        return ModelCheck(False, "induced", (i, j, hit))
    return ModelCheck(True)


def _path_order(host: Graph, X: Sequence[int]) -> list[int] | None:
    """The vertices of ``X`` in path order if ``host[X]`` is a path."""
    Xs = set(X)
    if len(Xs) == 1:
        return list(Xs)
    inner = {v: [w for w in host.adj[v] if w in Xs] for v in Xs}
    ends = sorted(v for v, nb in inner.items() if len(nb) == 1)
    if len(ends) != 2 or any(len(nb) > 2 for nb in inner.values()):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(Xs):
        nxt = [w for w in inner[order[-1]] if w != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if is_induced_path(host, order) else None


@dataclass(frozen=True)
class ContractedModel:
    """The model induced by a family of branch sets, as a plain graph.

    Vertex ``i`` of ``graph`` is ``branch_sets[i]``.
    """

    graph: Graph
    branch_sets: tuple[tuple[int, ...], ...]

    def owner_map(self) -> dict[int, int]:
        return {v: i for i, X in enumerate(self.branch_sets) for v in X}


def contract_model(host: Graph, sets: Iterable[Iterable[int]], complete_cover: bool = False) -> ContractedModel:
    """Contract each branch set to a vertex; two are adjacent iff some host edge joins them.

    With ``complete_cover`` every host vertex outside the given sets is added
    as a singleton branch set, after the given ones, in increasing id order.
    """
    branch = [tuple(sorted(set(X))) for X in sets]
    owner: dict[int, int] = {}
    for i, X in enumerate(branch):
        if not X:
            raise ModelError(f"branch set {i} is empty")
        for v in X:
            host.check_vertex(v)
            if v in owner:
                raise ModelError(f"branch sets {owner[v]} and {i} overlap at vertex {v}")
            owner[v] = i
    if complete_cover:
        for v in range(host.n):
            if v not in owner:
                owner[v] = len(branch)
                branch.append((v,))
    for i, X in enumerate(branch):
        if len(X) > 1 and not is_connected(host, X):
            raise ModelError(f"branch set {i} does not induce a connected subgraph")
    edges = set()
    for i, X in enumerate(branch):
        for v in X:
            for w in host.adj[v]:
                j = owner.get(w)
                if j is not None and j != i:
                    edges.add((min(i, j), max(i, j)))
    return ContractedModel(Graph(len(branch), edges), tuple(branch))


def linear_clique_model(lw: LayeredWheel) -> tuple[Model, dict[tuple[int, int], tuple[int, int]]]:
    """The linear ``K_k`` model with branch sets ``V(P_1), ..., V(P_k)``.

    Also returns, for each pair of layers ``i < j``, the cross edge at index
    ``2^(k-i+g)`` that witnesses their adjacency.
    """
    p = lw.params
    model = Model.of(lw.graph, (lw.path(i) for i in range(1, p.k + 1)), complete_graph(p.k))
    witnesses = {}
    for i in range(1, p.k + 1):
        x = 2 ** (p.k - i + p.g)
        for j in range(i + 1, p.k + 1):
            u, v = lw.id_of(i, x), lw.id_of(j, x)
            if not lw.graph.has_edge(u, v):
                raise AssertionError(f"missing cross edge between layers {i} and {j} at index {x}")
            witnesses[(i - 1, j - 1)] = (u, v)
    return model, witnesses


# -- induced minor search ------------------------------------------------


@dataclass(frozen=True)
class MinorSearchResult:
    status: str  # "yes" | "no" | "budget_exceeded"
    model: Model | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "yes"


def _connected_subsets(masks: Sequence[int], allowed: int):
    """Every connected vertex set inside ``allowed`` (as bitmasks), each exactly once.

    Sets are grouped by least vertex and grown by extension sets, smallest
    vertex first.
    """
    rest = allowed
    while rest:
        low = rest & -rest
        r = low.bit_length() - 1
        yield from _grow(masks, rest, low, masks[r] & rest & ~low, low)
        rest ^= low


def _grow(masks, allowed, S, ext, forbidden):
    yield S
    while ext:
        low = ext & -ext
        ext ^= low
        forbidden |= low
        v = low.bit_length() - 1
        new = masks[v] & allowed & ~forbidden & ~S & ~ext
        yield from _grow(masks, allowed, S | low, ext | new, forbidden)


def _closed_nbhd(masks, X: int) -> int:
    out = X
    for v in iter_bits(X):
        out |= masks[v]
    return out


def contains_induced_minor(
    host: Graph,
    pattern: Graph,
    budget: int | None = None,
    max_pattern: int = 6,
    max_host: int = 30,
) -> MinorSearchResult:
    """Exhaustive search for an induced model of ``pattern`` in ``host``.

    Pattern vertices are placed by decreasing degree; each gets a connected
    branch set drawn from the vertices not yet used and not adjacent to the
    sets of already-placed pattern non-neighbours.
    """
    if pattern.n > max_pattern or host.n > max_host:
        raise ValueError(f"instance too large: pattern {pattern.n} > {max_pattern} or host {host.n} > {max_host}")
    counter = Budget(budget)
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    masks = host.masks()
    full = (1 << host.n) - 1
    chosen: dict[int, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        avail = full & ~used
        need = []
        for q, X in chosen.items():
            if pattern.has_edge(p, q):
                need.append(_closed_nbhd(masks, X) & ~X)
            else:
                avail &= ~_closed_nbhd(masks, X)
        for X in _connected_subsets(masks, avail):
            counter.tick()
            if all(X & nb for nb in need):
                chosen[p] = X
                if place(i + 1, used | X):
                    return True
                del chosen[p]
        return False

    try:
        found = place(0, 0)
    except BudgetExceeded:
        return MinorSearchResult("budget_exceeded", None, counter.used)
    if not found:
        return MinorSearchResult("no", None, counter.used)
    sets = [tuple(iter_bits(chosen[p])) for p in range(pattern.n)]
    model = Model.of(host, sets, pattern)
    check = validate_model(model, require_induced=True)
    if not check:
        raise AssertionError(f"search produced an invalid model: {check}")
    return MinorSearchResult("yes", model, counter.used)

