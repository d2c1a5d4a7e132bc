"""
Layer diameters
===============

Layers built by the construction need not have diameter at most 2. With four
vertices and a single edge between the first two, the first layer is a path
on four vertices.
"""

from boxcube import IntervalRepresentation, construct, verify_layers

rep = IntervalRepresentation.from_pairs([(0, 1), (1, 2), (3, 3), (4, 4)])
run = construct(rep)
print("graph:", run.graph)
report = verify_layers(run.padded_graph, run.layers)
for i, (layer, d) in enumerate(zip(run.layers, report.diameters), start=1):
    print(f"layer {i}: edges {layer.graph().edges}")
    print(f"         component diameters {d.component_diameters}, connected={d.connected}")
