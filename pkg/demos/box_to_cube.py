"""
Boxes to cubes
==============

A 4-cycle has no interval representation, but it is the intersection graph of
four rectangles. Each axis is converted separately and the coordinates are
concatenated.
"""

import numpy as np

from boxcube import (
    BoxRepresentation,
    box_to_cube,
    intersection_graph_of_boxes,
    intersection_graph_of_intervals,
    project_to_intervals,
    random_box_rep,
)
from boxcube.cubes import ceil_log2

# a cross: 0 and 2 are split along x, 1 and 3 along y
c4 = BoxRepresentation(2, (
    ((0, 1), (0, 3)),
    ((0, 3), (0, 1)),
    ((2, 3), (0, 3)),
    ((0, 3), (2, 3)),
))
print("box graph:", intersection_graph_of_boxes(c4))
for p in range(c4.dims):
    print(f"axis {p} interval graph:", intersection_graph_of_intervals(project_to_intervals(c4, p)))

cubes = box_to_cube(c4)
print(f"cubes: dims={cubes.dims} (bound {c4.dims * ceil_log2(c4.n)}), side={cubes.side}")
print("equal:", cubes.graph() == intersection_graph_of_boxes(c4))

###############################################################################
# Random three-dimensional boxes behave the same way.

rng = np.random.default_rng(0)
for n in (5, 17, 64):
    rep = random_box_rep(n, 3, rng)
    cubes = box_to_cube(rep)
    print(f"n={n:3d}: {cubes.dims:2d} dims (bound {3 * ceil_log2(n)}), exact: {cubes.graph() == intersection_graph_of_boxes(rep)}")
