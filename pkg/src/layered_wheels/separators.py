"""Weight functions, balanced separators, and the separator assembly for ``H``.

All weight comparisons are exact: a weight function stores integer
numerators over one shared denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .construction import VertexClass
from .graph import Graph, bfs_distances, components
from .models import ContractedModel, contract_model
from .report import Check, Status
from .series_parallel import HPrimeResult, contract_to_h_prime, medium_neighbourhood
from .treewidth import (
    DEFAULT_TW_CAP,
    CapExceeded,
    TreeDecomposition,
    TreewidthResult,
    exact_treewidth,
    upper_bound,
    validate_decomposition,
)


class WeightError(ValueError):
    pass


@dataclass(frozen=True)
class WeightFunction:
    """Vertex weights ``num[v] / den``; total at most 1."""

    num: tuple[int, ...]
    den: int

    def __post_init__(self):
        if self.den <= 0 or any(x < 0 for x in self.num):
            raise WeightError("weights must be nonnegative with a positive denominator")
        if sum(self.num) > self.den:
            raise WeightError(f"total weight {Fraction(sum(self.num), self.den)} exceeds 1")

    @classmethod
    def from_fractions(cls, n: int, weights: Mapping[int, Fraction] | Sequence[Fraction]) -> "WeightFunction":
        items = weights.items() if isinstance(weights, Mapping) else enumerate(weights)
        fr = {}
        for v, x in items:
            if not 0 <= v < n:
                raise WeightError(f"vertex {v} out of range")
            fr[v] = Fraction(x)
        den = math.lcm(*(x.denominator for x in fr.values())) if fr else 1
        return cls(tuple(int(fr.get(v, 0) * den) for v in range(n)), den)

    @classmethod
    def uniform(cls, n: int) -> "WeightFunction":
        return cls((1,) * n, max(n, 1))

    @classmethod
    def point(cls, n: int, v: int) -> "WeightFunction":
        return cls(tuple(int(u == v) for u in range(n)), 1)

    @property
    def n(self) -> int:
        return len(self.num)

    @property
    def total(self) -> Fraction:
        return Fraction(sum(self.num), self.den)

    @property
    def proper(self) -> bool:
        return sum(self.num) == self.den

    def __call__(self, X: Iterable[int]) -> Fraction:
        return Fraction(self.mass(X), self.den)

    def mass(self, X: Iterable[int]) -> int:
        return sum(self.num[v] for v in X)

    def pushforward(self, sets: Sequence[Iterable[int]]) -> "WeightFunction":
        """The weight of each set, as a weight function on the sets."""
        return WeightFunction(tuple(self.mass(X) for X in sets), self.den)


def parse_weights(text: str, n: int) -> WeightFunction:
    """Parse ``<vertex-id> <numerator>/<denominator>`` lines; omitted vertices weigh 0."""
    weights: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or "/" not in parts[1]:
            raise WeightError(f"line {lineno}: expected '<id> <num>/<den>'")
        a, b = parts[1].split("/", 1)
        if not (parts[0].isdigit() and a.isdigit() and b.isdigit()):
            raise WeightError(f"line {lineno}: ids and weights must be unsigned integers")
        v, den = int(parts[0]), int(b)
        if den == 0:
            raise WeightError(f"line {lineno}: zero denominator")
        if v in weights:
            raise WeightError(f"line {lineno}: vertex {v} given twice")
        weights[v] = Fraction(int(a), den)
    return WeightFunction.from_fractions(n, weights)


def format_weights(w: WeightFunction) -> str:
    return "".join(f"{v} {x.numerator}/{x.denominator}\n" for v, x in ((v, Fraction(a, w.den)) for v, a in enumerate(w.num)) if x)


# -- balanced separators ----------------------------------------------------


def heaviest_component(G: Graph, w: WeightFunction, X: Iterable[int]) -> tuple[list[int], int]:
    """The heaviest component of ``G - X`` (least vertex on ties) and its mass."""
    X = set(X)
    best, mass = [], -1
    for comp in components(G, (v for v in range(G.n) if v not in X)):
        m = w.mass(comp)
        if m > mass:
            best, mass = comp, m
    return best, max(mass, 0)


def is_balanced_separator(G: Graph, w: WeightFunction, X: Iterable[int]) -> bool:
    """Every component of ``G - X`` has weight at most 1/2."""
    _, mass = heaviest_component(G, w, X)
    return 2 * mass <= w.den


def _best_cut(G: Graph, w: WeightFunction, comp: Sequence[int], after: int) -> int | None:
    """Least ``v > after`` in ``comp`` whose removal leaves only light pieces of ``comp``.

    One DFS with low-links: removing ``v`` splits off every child subtree
    whose low-link does not climb above ``v``; the rest stays together.
    """
    inside = set(comp)
    total = w.mass(comp)
    half = w.den
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    sub: dict[int, int] = {}
    split: dict[int, list[int]] = {v: [] for v in comp}
    root = comp[0]
    disc[root] = low[root] = 0
    sub[root] = w.num[root]
    stack = [(root, iter(G.adj[root]), -1)]
    t = 1
    while stack:
        v, it, parent = stack[-1]
        advanced = False
        for u in it:
            if u not in inside or u == parent:
                continue
            if u in disc:
                low[v] = min(low[v], disc[u])
                continue
            disc[u] = low[u] = t
            sub[u] = w.num[u]
            t += 1
            stack.append((u, iter(G.adj[u]), v))
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            sub[p] += sub[v]
            if low[v] >= disc[p]:
                split[p].append(sub[v])
    for v in sorted(comp):
        if v <= after:
            continue
        pieces = split[v]
        rest = total - w.num[v] - sum(pieces)
        if 2 * max(pieces + [rest]) <= half:
            return v
    return None


def min_balanced_separator(G: Graph, w: WeightFunction, cap: int = 6) -> tuple[int, ...] | None:
    """The lexicographically least minimum-size balanced separator with at most ``cap`` vertices.

    Exhaustive by increasing size.  Only vertices of the current heavy
    component are tried: if a minimum separator had a vertex outside it, the
    rest of the separator together with the earlier picks would already be
    balanced.  The final vertex is found by one cut-vertex pass.
    """
    if is_balanced_separator(G, w, ()):
        return ()
    for size in range(1, cap + 1):
        found = _search(G, w, [], size)
        if found is not None:
            return tuple(found)
    return None


def _search(G: Graph, w: WeightFunction, picked: list[int], size: int) -> list[int] | None:
    comp, mass = heaviest_component(G, w, picked)
    if 2 * mass <= w.den:
        # only reachable with fewer picks than size, which was already ruled out
        return None
    after = picked[-1] if picked else -1
    if len(picked) == size - 1:
        v = _best_cut(G, w, comp, after)
        return None if v is None else picked + [v]
    for v in comp:
        if v > after:
            found = _search(G, w, picked + [v], size)
            if found is not None:
                return found
    return None


def separator_from_decomposition(G: Graph, w: WeightFunction, td: TreeDecomposition) -> tuple[int, ...]:
    """A bag of ``td`` that is a balanced separator.

    Start at node 0 and step towards the heavy component until there is none.
    """
    check = validate_decomposition(G, td)
    if not check:
        raise ValueError(f"invalid tree decomposition: {check}")
    home: dict[int, int] = {}
    for t, bag in enumerate(td.bags):
        for v in bag:
            home.setdefault(v, t)
    t = 0
    for _ in range(td.tree.n + 1):
        bag = td.bags[t]
        comp, mass = heaviest_component(G, w, bag)
        if 2 * mass <= w.den:
            return tuple(sorted(bag))
        # the heavy component lives on one side of t; walk one step to it
        dist = bfs_distances(td.tree, home[comp[0]])
        t = min(td.tree.adj[t], key=lambda u: (dist[u], u))
    raise AssertionError("centroid walk did not terminate")


# -- the pipeline ----------------------------------------------------------


class PipelineFalsified(RuntimeError):
    """No balanced separator of size <= 3 in ``H'``; would contradict ``tw(H') <= 2``."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class SeparatorPipelineState:
    H: Graph
    classes: tuple[VertexClass, ...]
    w: WeightFunction
    hp: HPrimeResult
    w_prime: WeightFunction
    k_prime: tuple[int, ...]
    k_b_big: tuple[int, ...]
    k_b_small: tuple[int, ...]
    k_m: tuple[int, ...]
    k_s: tuple[int, ...]
    y_big: tuple[int, ...]
    y_small: tuple[int, ...]
    h2: ContractedModel
    n_side: tuple[int, ...]
    d_side: tuple[int, ...]
    w2: WeightFunction
    td2: TreewidthResult
    k2: tuple[int, ...]
    k2_n: tuple[int, ...]
    k2_d: tuple[int, ...]
    k2_star: tuple[int, ...]
    K: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def h2_width(self) -> int:
        return self.td2.width

    def h2_big_degree(self) -> int:
        return self.h2.graph.max_degree() if self.h2.graph.n else 0


def build_pipeline(
    H: Graph,
    classes: Sequence[VertexClass],
    w: WeightFunction,
    tw_cap: int = DEFAULT_TW_CAP,
) -> SeparatorPipelineState:
    """Assemble a balanced separator of ``H`` from ones in ``H'`` and ``H''``."""
    if w.n != H.n:
        raise WeightError("weight function and graph disagree on the vertex count")
    if not w.proper:
        raise WeightError("the pipeline needs a weight function of total exactly 1")
    classes = tuple(classes)
    hp = contract_to_h_prime(H, classes)
    Hp = hp.h_prime
    wp = w.pushforward(hp.branch_sets)
    kp = min_balanced_separator(Hp, wp, 3)
    if kp is None:
        raise PipelineFalsified(
            "H' has no balanced separator of size at most 3",
            {"h_prime_n": Hp.n, "h_prime_m": Hp.m, "weights": list(wp.num), "den": wp.den},
        )

    k_b_big, k_b_small, k_m, k_s = [], [], [], []
    for x in kp:
        b = hp.roots[x]
        if b is not None:
            (k_b_big if H.degree(b) > 3 else k_b_small).append(x)
        elif classes[hp.branch_sets[x][0]] is VertexClass.MEDIUM:
            k_m.append(x)
        else:
            k_s.append(x)
    y_big = [hp.roots[x] for x in k_b_big]
    y_small = [hp.roots[x] for x in k_b_small]

    n_sets = sorted((n,) for b in y_big for n in medium_neighbourhood(H, classes, b)[1:])
    kp_set = set(kp)
    d_sets = []
    for comp in components(Hp, (x for x in range(Hp.n) if x not in kp_set)):
        d_sets.append(tuple(sorted(v for x in comp for v in hp.branch_sets[x])))
    h2 = contract_model(H, n_sets + d_sets)
    n_side = tuple(range(len(n_sets)))
    d_side = tuple(range(len(n_sets), len(n_sets) + len(d_sets)))
    w2 = w.pushforward(h2.branch_sets)

    notes = []
    try:
        td2 = exact_treewidth(h2.graph, tw_cap)
    except CapExceeded:
        td2 = upper_bound(h2.graph)
        notes.append("H'' decomposition from min-fill: width is an upper bound")
    k2 = separator_from_decomposition(h2.graph, w2, td2.decomposition)
    n_ids = set(n_side)
    k2_n = tuple(x for x in k2 if x in n_ids)
    k2_d = tuple(x for x in k2 if x not in n_ids)
    nb_d = {u for x in k2_d for u in h2.graph.adj[x]}
    k2_star = tuple(sorted(set(k2_n) | nb_d))

    K = set(y_big)
    for x in k_s + k_m + k_b_small:
        K.update(hp.branch_sets[x])
    for x in k2_star:
        K.update(h2.branch_sets[x])
    return SeparatorPipelineState(
        H=H,
        classes=classes,
        w=w,
        hp=hp,
        w_prime=wp,
        k_prime=tuple(kp),
        k_b_big=tuple(k_b_big),
        k_b_small=tuple(k_b_small),
        k_m=tuple(k_m),
        k_s=tuple(k_s),
        y_big=tuple(y_big),
        y_small=tuple(y_small),
        h2=h2,
        n_side=n_side,
        d_side=d_side,
        w2=w2,
        td2=td2,
        k2=k2,
        k2_n=k2_n,
        k2_d=k2_d,
        k2_star=k2_star,
        K=tuple(sorted(K)),
        notes=tuple(notes),
    )


def _bipartite_sides_ok(state: SeparatorPipelineState) -> bool:
    n_ids = set(state.n_side)
    return all((u in n_ids) != (v in n_ids) for u, v in state.h2.graph.edges())


def verify_H_separator_bound(state: SeparatorPipelineState) -> list[Check]:
    """Re-check the separator inequalities with the measured width of ``H''``."""
    width = state.h2_width
    bound = 21 + 9 * (width + 1)
    checks = [
        Check(
            "k-prime-size",
            "K' is a w'-balanced separator of H' with at most 3 nodes",
            Status.PASS
            if len(state.k_prime) <= 3 and is_balanced_separator(state.hp.h_prime, state.w_prime, state.k_prime)
            else Status.FAIL,
            {"k_prime": [list(state.hp.branch_sets[x]) for x in state.k_prime]},
        ),
        Check(
            "h2-bipartite",
            "H'' is bipartite with sides N and D",
            Status.PASS if _bipartite_sides_ok(state) else Status.FAIL,
            {"n": len(state.n_side), "d": len(state.d_side)},
        ),
        Check(
            "h2-separator",
            "K''_N with the neighbours of K''_D is w''-balanced in H'' with at most 9(width+1) nodes",
            Status.PASS
            if is_balanced_separator(state.h2.graph, state.w2, state.k2_star) and len(state.k2_star) <= 9 * (width + 1)
            else Status.FAIL,
            {"size": len(state.k2_star), "width": width, "exact": state.td2.exact},
        ),
        Check(
            "k-balanced",
            "K is a w-balanced separator of H",
            Status.PASS if is_balanced_separator(state.H, state.w, state.K) else Status.FAIL,
            {"K": list(state.K)},
        ),
        Check(
            "k-size",
            "|K| <= 21 + 9(width(H'') + 1)",
            Status.PASS if len(state.K) <= bound else Status.FAIL,
            {"size": len(state.K), "bound": bound, "width": width, "exact": state.td2.exact},
        ),
    ]
    return checks


def h_prime_invariants(H: Graph, classes: Sequence[VertexClass], g: int, hp: HPrimeResult | None = None) -> list[Check]:
    """Degrees off the big nodes of ``H'`` are at most 2; big nodes are far apart."""
    hp = hp or contract_to_h_prime(H, classes)
    Hp = hp.h_prime
    bad_deg = [x for x in range(Hp.n) if hp.roots[x] is None and Hp.degree(x) > 2]
    bigs = set(hp.big_nodes())
    need = Fraction(2**g, 3) - 2
    close = None
    for x in sorted(bigs):
        for y, d in bfs_distances(Hp, x, limit=max(math.ceil(need) - 1, 0)).items():
            if y != x and y in bigs and d < need:
                close = (x, y, d)
                break
        if close:
            break
    return [
        Check(
            "h-prime-degrees",
            "nodes of H' other than big nodes have degree at most 2",
            Status.PASS if not bad_deg else Status.FAIL,
            {"offenders": [list(hp.branch_sets[x]) for x in bad_deg[:5]]},
        ),
        Check(
            "h-prime-big-distance",
            "distinct big nodes of H' are at distance at least 2^g/3 - 2",
            Status.PASS if close is None else Status.FAIL,
            None if close is None else {"pair": [list(hp.branch_sets[close[0]]), list(hp.branch_sets[close[1]])], "distance": close[2]},
        ),
    ]
