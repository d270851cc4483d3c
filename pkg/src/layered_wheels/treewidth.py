"""Tree decompositions, exact treewidth at desk scale, and cheap bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, components, induced_subgraph
from .models import ModelCheck
from .search import Budget, iter_bits

DEFAULT_TW_CAP = 25


class CapExceeded(ValueError):
    """The irreducible part of the instance is too large for the exact solver."""


class InvalidDecomposition(ValueError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by the vertices of ``tree``."""

    tree: Graph
    bags: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def validate_decomposition(G: Graph, td: TreeDecomposition) -> ModelCheck:
    """Check the three tree-decomposition axioms; name the first one violated."""
    T = td.tree
    if T.n != len(td.bags) or T.n == 0:
        return ModelCheck(False, "bags", (T.n, len(td.bags)))
    if T.m != T.n - 1 or len(components(T)) != 1:
        return ModelCheck(False, "tree", (T.n, T.m))
    where: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for t, bag in enumerate(td.bags):
        for v in bag:
            if v not in where:
                return ModelCheck(False, "range", (t, v))
            where[v].append(t)
    for v, ts in where.items():
        if not ts:
            return ModelCheck(False, "vertex", (v,))
    for u, v in G.edges():
        if not set(where[u]) & set(where[v]):
            return ModelCheck(False, "edge", (u, v))
    for v, ts in where.items():
        if len(components(T, ts)) != 1:
            return ModelCheck(False, "subtree", (v,))
    return ModelCheck(True)


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    decomposition: TreeDecomposition
    exact: bool
    ordering: tuple[int, ...]
    lower: int


# -- elimination game ------------------------------------------------------


def _eliminate(adj: list[int], v: int) -> None:
    nb = adj[v]
    for u in iter_bits(nb):
        adj[u] = (adj[u] | nb) & ~(1 << u) & ~(1 << v)
    adj[v] = 0


def _is_clique(adj: Sequence[int], X: int) -> bool:
    for u in iter_bits(X):
        if (X & ~(1 << u)) & ~adj[u]:
            return False
    return True


def ordering_width(G: Graph, ordering: Sequence[int]) -> int:
    adj = list(G.masks())
    width = -1 if G.n == 0 else 0
    for v in ordering:
        width = max(width, adj[v].bit_count())
        _eliminate(adj, v)
    return width


def decomposition_from_ordering(G: Graph, ordering: Sequence[int]) -> TreeDecomposition:
    """The standard decomposition of an elimination ordering.

    The bag of ``v`` is ``v`` plus its neighbours at elimination time; it hangs
    off the bag of whichever of those neighbours is eliminated first.
    """
    if sorted(ordering) != list(range(G.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    if G.n == 0:
        return TreeDecomposition(Graph(1), ((),))
    pos = {v: i for i, v in enumerate(ordering)}
    adj = list(G.masks())
    bags, edges, roots = [], [], []
    for i, v in enumerate(ordering):
        nb = list(iter_bits(adj[v]))
        bags.append(tuple(sorted([v, *nb])))
        if nb:
            edges.append((i, min(pos[u] for u in nb)))
        else:
            roots.append(i)
        _eliminate(adj, v)
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition(Graph(len(bags), edges), tuple(bags))


def min_fill_ordering(G: Graph) -> list[int]:
    """Greedy min-fill, ties by degree then id."""
    adj = list(G.masks())
    alive = set(range(G.n))
    order = []
    while alive:
        best, key = None, None
        for v in sorted(alive):
            nb = list(iter_bits(adj[v]))
            fill = sum(1 for i, a in enumerate(nb) for b in nb[i + 1 :] if not adj[a] >> b & 1)
            k = (fill, len(nb))
            if key is None or k < key:
                best, key = v, k
                if fill == 0:
                    break
        order.append(best)
        _eliminate(adj, best)
        alive.discard(best)
    return order


def minor_min_width(G: Graph) -> int:
    """Lower bound: contract a min-degree vertex into its min-degree neighbour."""
    adj = list(G.masks())
    alive = set(range(G.n))
    lb = 0
    while len(alive) > 1:
        v = min(alive, key=lambda x: (adj[x].bit_count(), x))
        d = adj[v].bit_count()
        lb = max(lb, d)
        if d == 0:
            alive.discard(v)
            continue
        u = min(iter_bits(adj[v]), key=lambda x: (adj[x].bit_count(), x))
        merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
        for w in iter_bits(adj[v]):
            adj[w] &= ~(1 << v)
            if w != u:
                adj[w] |= 1 << u
        adj[u] = merged
        adj[v] = 0
        alive.discard(v)
    return lb


def upper_bound(G: Graph) -> TreewidthResult:
    order = min_fill_ordering(G)
    td = decomposition_from_ordering(G, order)
    return TreewidthResult(td.width, td, False, tuple(order), minor_min_width(G))


# -- exact search ----------------------------------------------------------


def _reduce(adj: list[int], alive: int, low: int) -> tuple[list[int], int, int]:
    """Eliminate simplicial and almost simplicial vertices while safe.

    Returns the eliminated vertices, the new alive set, and the raised lower bound.
    """
    done = []
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            nb = adj[v]
            d = nb.bit_count()
            if _is_clique(adj, nb):
                low = max(low, d)
            elif d > low or not any(_is_clique(adj, nb & ~(1 << u)) for u in iter_bits(nb)):
                continue
            done.append(v)
            _eliminate(adj, v)
            alive &= ~(1 << v)
            changed = True
    return done, alive, low


def _decide(adj0: list[int], alive0: int, k: int, failed: set[int], budget: Budget) -> list[int] | None:
    """An elimination ordering of ``alive0`` of width <= k, or None."""

    def go(adj: list[int], alive: int) -> list[int] | None:
        budget.tick()
        done = []
        while True:
            if alive.bit_count() <= k + 1:
                return done + list(iter_bits(alive))
            if alive in failed:
                return None
            step = None
            for v in iter_bits(alive):
                nb = adj[v]
                d = nb.bit_count()
                if d <= k and (_is_clique(adj, nb) or any(_is_clique(adj, nb & ~(1 << u)) for u in iter_bits(nb))):
                    step = v
                    break
            if step is None:
                break
            done.append(step)
            _eliminate(adj, step)
            alive &= ~(1 << step)
        cands = sorted((adj[v].bit_count(), v) for v in iter_bits(alive))
        for d, v in cands:
            if d > k:
                break
            nxt = list(adj)
            _eliminate(nxt, v)
            rest = go(nxt, alive & ~(1 << v))
            if rest is not None:
                return done + [v] + rest
        failed.add(alive)
        return None

    return go(list(adj0), alive0)


def _component_ordering(G: Graph, cap: int, budget: Budget) -> tuple[list[int], int]:
    adj = list(G.masks())
    alive = (1 << G.n) - 1
    low = minor_min_width(G)
    prefix, alive, low = _reduce(adj, alive, low)
    if alive.bit_count() > cap:
        raise CapExceeded(f"irreducible kernel has {alive.bit_count()} vertices, above the cap of {cap}")
    kernel = list(iter_bits(alive))
    if not kernel:
        return prefix, ordering_width(G, prefix)
    # work on the filled kernel graph, re-indexed
    idmap = {old: i for i, old in enumerate(kernel)}
    back = {new: old for old, new in idmap.items()}
    kadj = [0] * len(kernel)
    for old in kernel:
        m = 0
        for u in iter_bits(adj[old]):
            m |= 1 << idmap[u]
        kadj[idmap[old]] = m
    low = max(low, minor_min_width(Graph.from_adjacency([list(iter_bits(m)) for m in kadj])))
    ub_order = min_fill_ordering(Graph.from_adjacency([list(iter_bits(m)) for m in kadj]))
    ub = _masks_width(kadj, ub_order)
    failed: set[int] = set()
    full = (1 << len(kernel)) - 1
    best = ub_order
    for k in range(low, ub):
        found = _decide(kadj, full, k, failed, budget)
        if found is not None:
            best = found
            break
        failed.clear()
    order = prefix + [back[v] for v in best]
    return order, ordering_width(G, order)


def _masks_width(adj: Sequence[int], ordering: Sequence[int]) -> int:
    adj = list(adj)
    width = 0
    for v in ordering:
        width = max(width, adj[v].bit_count())
        _eliminate(adj, v)
    return width


def exact_treewidth(G: Graph, cap: int = DEFAULT_TW_CAP, budget: int | None = None) -> TreewidthResult:
    """Exact treewidth with a validated witnessing decomposition.

    Safe reductions run first; ``cap`` bounds the size of what is left in each
    component.  Raises :class:`CapExceeded` above it and
    :class:`~layered_wheels.search.BudgetExceeded` when the search runs out.
    """
    counter = Budget(budget)
    order: list[int] = []
    width = -1 if G.n == 0 else 0
    for comp in components(G):
        sub, idmap = induced_subgraph(G, comp)
        back = {new: old for old, new in idmap.items()}
        sub_order, w = _component_ordering(sub, cap, counter)
        order.extend(back[v] for v in sub_order)
        width = max(width, w)
    td = decomposition_from_ordering(G, order)
    check = validate_decomposition(G, td)
    if not check:
        raise InvalidDecomposition(f"solver produced an invalid decomposition: {check}")
    if td.width != width:
        raise AssertionError(f"decomposition width {td.width} differs from ordering width {width}")
    return TreewidthResult(width, td, True, tuple(order), width)
