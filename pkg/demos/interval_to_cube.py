"""
From intervals to unit cubes
============================

Three intervals whose intersection graph is the path a - b - c, turned into
two-dimensional cubes of side 4.
"""

from fractions import Fraction

from boxcube import (
    IntervalRepresentation,
    construct,
    intersection_graph_of_intervals,
    verify_layers,
)

rep = IntervalRepresentation.from_pairs([(0, 1), (Fraction(1, 2), 2), (Fraction(3, 2), 3)])
print("graph:", intersection_graph_of_intervals(rep))

###############################################################################
# The vertices are ordered by left endpoint, then padded with isolated
# vertices up to a power of two. Here n = 3 becomes 4, so k = 2 layers.

run = construct(rep)
print("ordering:", run.ordering.positions, "-> padded", run.padded_ordering.positions)

###############################################################################
# Each layer is a family of equal-length intervals. Layer i cuts the ordering
# into blocks of 2**(i-1) positions; odd blocks sit low, even blocks sit high,
# and a low vertex reaches up to its last high neighbour.

for i, layer in enumerate(run.layers, start=1):
    spans = [(a, a + layer.length) for a in layer.anchors]
    print(f"layer {i}: {spans}  edges {layer.graph().edges}")

report = verify_layers(run.padded_graph, run.layers)
print("every layer contains G:", all(report.superset_ok))
print("layers intersect to G: ", report.intersection_ok)

###############################################################################
# Reading the layer anchors as coordinates gives one cube per vertex.

cubes = run.cubes
print(f"dims={cubes.dims} side={cubes.side}")
for v, row in enumerate(cubes.anchors.tolist()):
    print(f"  vertex {v}: anchor {row}")
print("cube graph equals G:", cubes.graph() == run.graph)
