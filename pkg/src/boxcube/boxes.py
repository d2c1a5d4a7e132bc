"""Axis-parallel box representations and their conversion to cubes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cubes import CubeRepresentation, ceil_log2, interval_to_cube
from .errors import InvalidArgument
from .graph import Graph, is_complete
from .intervals import IntervalRepresentation, intersection_graph_of_intervals


@dataclass(frozen=True)
class BoxRepresentation:
    dims: int
    boxes: tuple[tuple[tuple[Fraction, Fraction], ...], ...]

    def __post_init__(self):
        fixed = []
        for v, box in enumerate(self.boxes):
            box = tuple((Fraction(lo), Fraction(hi)) for lo, hi in box)
            if len(box) != self.dims:
                raise InvalidArgument(f"box of vertex {v} has {len(box)} intervals, expected {self.dims}")
            for p, (lo, hi) in enumerate(box):
                if lo > hi:
                    raise InvalidArgument(f"box of vertex {v}, dimension {p}: l > r ([{lo}, {hi}])")
            fixed.append(box)
        object.__setattr__(self, "boxes", tuple(fixed))

    @property
    def n(self) -> int:
        return len(self.boxes)


def project_to_intervals(rep: BoxRepresentation, p: int) -> IntervalRepresentation:
    if not 0 <= p < rep.dims:
        raise InvalidArgument(f"dimension {p} out of range 0..{rep.dims - 1}")
    return IntervalRepresentation(tuple(box[p] for box in rep.boxes))


def intersection_graph_of_boxes(rep: BoxRepresentation) -> Graph:
    adj = np.ones((rep.n, rep.n), dtype=bool)
    for p in range(rep.dims):
        adj &= intersection_graph_of_intervals(project_to_intervals(rep, p)).adjacency
    return Graph.from_adjacency(adj)


def box_to_cube(rep: BoxRepresentation) -> CubeRepresentation:
    """Concatenate the cube representations of the per-dimension interval graphs.

    Dimensions whose interval graph is complete constrain nothing and are
    dropped, so the result has at most ``dims * ceil(log2 n)`` dimensions.
    """
    if rep.n < 1:
        raise InvalidArgument("box representation has no vertices")
    side = 1 << ceil_log2(rep.n)
    blocks = []
    for p in range(rep.dims):
        proj = project_to_intervals(rep, p)
        if is_complete(intersection_graph_of_intervals(proj)):
            continue
        cubes = interval_to_cube(proj)
        assert cubes.side == side
        blocks.append(cubes.anchors)
    if not blocks:
        return CubeRepresentation(rep.n, 0, side, np.zeros((rep.n, 0), dtype=np.int64))
    anchors = np.concatenate(blocks, axis=1)
    return CubeRepresentation(rep.n, anchors.shape[1], side, anchors)


def random_box_rep(n: int, dims: int, rng: np.random.Generator) -> BoxRepresentation:
    """Boxes whose coordinate intervals have integer endpoints in [1, 2n]."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    pts = np.sort(rng.integers(1, 2 * n + 1, size=(n, dims, 2)), axis=2)
    return BoxRepresentation(
        dims, tuple(tuple((int(a), int(b)) for a, b in row) for row in pts)
    )
