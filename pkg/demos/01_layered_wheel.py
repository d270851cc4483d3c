"""Build a small layered wheel, look at its vertex classes, and certify tw >= k-1."""

from collections import Counter

from layered_wheels.construction import LayeredWheelParams, build, verify_construction_invariants
from layered_wheels.graph import girth
from layered_wheels.models import linear_clique_model, validate_model
from layered_wheels.treewidth import exact_treewidth

lw = build(LayeredWheelParams(g=1, k=4))
print(f"G_4^1: {lw.graph.n} vertices, {lw.graph.m} edges, girth {girth(lw.graph)}")
print("classes:", dict(Counter(c.value for c in lw.classes)))

for check in verify_construction_invariants(lw):
    print(f"  {check.status.value:5s} {check.name}")

model, witnesses = linear_clique_model(lw)
print("linear K_4 model valid:", bool(validate_model(model, require_linear=True)))
for (i, j), (u, v) in sorted(witnesses.items()):
    print(f"  layers {i + 1} and {j + 1} touch along {lw.labels[u]} -- {lw.labels[v]}")

# the model gives tw >= 3; the exact solver says how far above that we are
print("exact treewidth:", exact_treewidth(lw.graph).width)
