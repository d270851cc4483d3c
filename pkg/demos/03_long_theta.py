"""Force H'' to have a high-degree node and pull a long theta out of it.

On G_7^g put weight 1/3 on three vertices: the middle of layer 1, a quarter of
the way along layer 2, and just past three eighths of the way along layer 7.
The two big nodes on layers 1 and 2 then form K', and the expansion of the
component holding the layer-7 mass touches at least nine mediums of the
layer-1 big vertex.
"""

from layered_wheels.construction import LayeredWheelParams, build
from layered_wheels.separators import WeightFunction, build_pipeline
from layered_wheels.theta import crossing_witness, extract_long_theta_from_pipeline, validate_theta

for g in (1, 3):
    lw = build(LayeredWheelParams(g, 7))
    L = lw.params.path_length
    num = [0] * lw.graph.n
    for v in (lw.id_of(1, L // 2), lw.id_of(2, L // 4), lw.id_of(7, 3 * L // 8 + 1)):
        num[v] = 1
    state = build_pipeline(lw.graph, lw.classes, WeightFunction(tuple(num), 3))
    print(f"g={g}: H'' max degree {state.h2.graph.max_degree()}")
    res = extract_long_theta_from_pipeline(state, g)
    T = res.certificate
    print(f"  {res.status}: ends {lw.labels[T.a]} and {lw.labels[T.b]}, length {T.length}, "
          f"valid {bool(validate_theta(lw.graph, T))}")
    w = crossing_witness(T, T.vertices())
    print("  crossing quadruple under the id order:", [lw.labels[x] for x in w.quad])
