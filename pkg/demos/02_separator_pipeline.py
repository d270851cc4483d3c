"""Contract H to H', split it with a small separator, and assemble a separator of H."""

import random

from layered_wheels.construction import LayeredWheelParams, build
from layered_wheels.separators import WeightFunction, build_pipeline, h_prime_invariants, verify_H_separator_bound
from layered_wheels.series_parallel import h_prime_of, is_series_parallel
from layered_wheels.suites import sample_subgraph

lw = build(LayeredWheelParams(g=2, k=4))
rng = random.Random(6)
# drop about one vertex in twenty
H = sample_subgraph(lw, rng, 0.05)
hp = h_prime_of(H)
print(f"H: {H.graph.n} vertices; H': {hp.h_prime.n} nodes, series-parallel: {bool(is_series_parallel(hp.h_prime))}")

w = WeightFunction.uniform(H.graph.n)
state = build_pipeline(H.graph, H.classes, w)
print("K' (as branch sets):", [list(hp.branch_sets[x]) for x in state.k_prime])
print(f"H'': {state.h2.graph.n} nodes, max degree {state.h2_big_degree()}, decomposition width {state.h2_width}")
print(f"big separator vertices kept whole: {list(state.y_big)}; their mediums go to the N side")
print(f"K has {len(state.K)} vertices: {list(state.K)}")
for check in verify_H_separator_bound(state) + h_prime_invariants(H.graph, H.classes, 2, state.hp):
    print(f"  {check.status.value:5s} {check.claim}")
