"""Unit-cube representations of interval graphs.

Given an interval representation on n vertices, the vertex set is padded to
n' = 2**k vertices (k = ceil(log2 n)) and k unit-interval layers are built
from the dyadic block partitions of the left-endpoint ordering. Every layer
contains all edges of the graph, and each non-edge is missing from at least
one layer, so the layers' anchors, read as coordinates, give cubes of side n'
whose intersection graph is exactly the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InvalidArgument
from .graph import DiameterReport, Graph, add_isolated, diameter, edge_intersection, is_complete
from .intervals import (
    IntervalRepresentation,
    UnitIntervalRepresentation,
    VertexOrdering,
    check_ordering_property,
    intersection_graph_of_intervals,
    left_endpoint_ordering,
)


def ceil_log2(n: int) -> int:
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    return (n - 1).bit_length()


@dataclass(frozen=True, eq=False)
class CubeRepresentation:
    """Cubes ``prod_p [anchors[v, p], anchors[v, p] + side]``.

    Two cubes intersect iff their anchors differ by at most ``side`` in every
    dimension. ``dims == 0`` represents the complete graph.
    """

    n: int
    dims: int
    side: int
    anchors: np.ndarray

    def __post_init__(self):
        anchors = np.array(self.anchors, dtype=np.int64).reshape(self.n, self.dims)
        anchors.flags.writeable = False
        object.__setattr__(self, "anchors", anchors)
        if self.side < 1:
            raise InvalidArgument(f"side must be a positive integer, got {self.side}")

    def graph(self) -> Graph:
        return intersection_graph_of_cubes(self)

    def normalized_anchors(self) -> list[list[Fraction]]:
        """Anchors divided by the side, so that every cube has side 1."""
        return [[Fraction(int(a), self.side) for a in row] for row in self.anchors]

    def __eq__(self, other):
        if not isinstance(other, CubeRepresentation):
            return NotImplemented
        return (self.n, self.dims, self.side) == (other.n, other.dims, other.side) and np.array_equal(
            self.anchors, other.anchors
        )

    __hash__ = None


def intersection_graph_of_cubes(rep: CubeRepresentation) -> Graph:
    adj = np.ones((rep.n, rep.n), dtype=bool)
    for p in range(rep.dims):
        a = rep.anchors[:, p]
        adj &= np.abs(a[:, None] - a[None, :]) <= rep.side
    return Graph.from_adjacency(adj)


def separating_dimensions(rep: CubeRepresentation, u: int, v: int) -> list[int]:
    """Dimensions in which the cubes of u and v are disjoint."""
    diff = np.abs(rep.anchors[u] - rep.anchors[v])
    return np.flatnonzero(diff > rep.side).tolist()


def pad_to_power_of_two(g: Graph, f: VertexOrdering) -> tuple[Graph, VertexOrdering, int]:
    """Append isolated vertices at positions n+1..2**k; k = ceil(log2 n)."""
    if g.n < 1:
        raise InvalidArgument("cannot pad an empty graph")
    k = ceil_log2(g.n)
    extra = (1 << k) - g.n
    if extra == 0:
        return g, f, k
    padded = add_isolated(g, extra)
    positions = f.positions + tuple(range(g.n + 1, g.n + extra + 1))
    return padded, VertexOrdering(positions), k


@dataclass(frozen=True)
class LayerPlan:
    """Block index (1-based) and side of every vertex in layer ``i``.

    Blocks are runs of ``block_size`` consecutive positions; odd blocks form
    side A, even blocks side B.
    """

    i: int
    block_size: int
    blocks: tuple[int, ...]
    on_b_side: tuple[bool, ...]

    @property
    def a_side(self) -> list[int]:
        return [v for v, b in enumerate(self.on_b_side) if not b]

    @property
    def b_side(self) -> list[int]:
        return [v for v, b in enumerate(self.on_b_side) if b]


def plan_layer(f: VertexOrdering, i: int) -> LayerPlan:
    pos = np.asarray(f.positions, dtype=np.int64)
    size = 1 << (i - 1)
    blocks = (pos - 1) // size + 1
    return LayerPlan(i, size, tuple(blocks.tolist()), tuple((blocks % 2 == 0).tolist()))


def _layer_anchors(adj: np.ndarray, pos: np.ndarray, n: int, i: int) -> np.ndarray:
    on_b = ((pos - 1) >> (i - 1)) % 2 == 1
    # Max B-neighbour position of every vertex; 0 when there is none, which is
    # also the anchor of an A vertex without B-neighbours. Reducing over rows
    # of the (symmetric) adjacency keeps the pass contiguous in memory.
    weights = pos[on_b].astype(np.uint32)
    t = (adj[on_b] * weights[:, None]).max(axis=0, initial=0)
    return np.where(on_b, n + pos, t.astype(np.int64))


def _check_layer_args(g: Graph, f: VertexOrdering, n: int, i: int) -> None:
    if n < 1 or n & (n - 1):
        raise InvalidArgument(f"padded vertex count must be a power of two, got {n}")
    if g.n != n or f.n != n:
        raise InvalidArgument(f"graph ({g.n}) and ordering ({f.n}) must have {n} vertices")
    if not 1 <= i <= n.bit_length() - 1:
        raise InvalidArgument(f"layer index {i} outside 1..{n.bit_length() - 1}")


def build_layer(g: Graph, f: VertexOrdering, n: int, i: int, check: bool = True) -> UnitIntervalRepresentation:
    """Unit-interval layer ``i`` (length n) of a padded graph.

    B-side vertices get ``[n + f(v), 2n + f(v)]``. An A-side vertex gets
    ``[t, n + t]`` where t is the largest position of a B-side neighbour, or
    ``[0, n]`` if it has none.
    """
    _check_layer_args(g, f, n, i)
    if check and not check_ordering_property(g, f):
        raise InvalidArgument("ordering does not satisfy the interval ordering property")
    pos = np.asarray(f.positions, dtype=np.int64)
    anchors = _layer_anchors(g.adjacency, pos, n, i)
    return UnitIntervalRepresentation(tuple(anchors.tolist()), n)


@dataclass(frozen=True)
class Construction:
    """Every intermediate object of one interval-to-cube run."""

    graph: Graph
    ordering: VertexOrdering
    padded_graph: Graph
    padded_ordering: VertexOrdering
    k: int
    layers: tuple[UnitIntervalRepresentation, ...]
    cubes: CubeRepresentation


def construct(rep: IntervalRepresentation) -> Construction:
    if rep.n < 1:
        raise InvalidArgument("interval representation has no vertices")
    g = intersection_graph_of_intervals(rep)
    f = left_endpoint_ordering(rep)
    padded, pf, k = pad_to_power_of_two(g, f)
    side = padded.n
    if is_complete(g):
        cubes = CubeRepresentation(g.n, 0, side, np.zeros((g.n, 0), dtype=np.int64))
        return Construction(g, f, padded, pf, k, (), cubes)

    pos = np.asarray(pf.positions, dtype=np.int64)
    adj = padded.adjacency
    cols = [_layer_anchors(adj, pos, side, i) for i in range(1, k + 1)]
    layers = tuple(UnitIntervalRepresentation(tuple(c.tolist()), side) for c in cols)
    anchors = np.stack(cols, axis=1)[: g.n]
    return Construction(g, f, padded, pf, k, layers, CubeRepresentation(g.n, k, side, anchors))


def interval_to_cube(rep: IntervalRepresentation) -> CubeRepresentation:
    """Cube representation in ceil(log2 n) dimensions (0 for a complete graph)."""
    return construct(rep).cubes


@dataclass(frozen=True)
class LayerReport:
    superset_ok: tuple[bool, ...]
    intersection_ok: bool
    diameters: tuple[DiameterReport, ...]

    @property
    def ok(self) -> bool:
        return all(self.superset_ok) and self.intersection_ok


def verify_layers(g: Graph, layers: Sequence[UnitIntervalRepresentation]) -> LayerReport:
    """Check that each layer contains G and that together they cut out exactly G.

    Also reports the per-component diameters of every layer graph.
    """
    if not layers:
        raise InvalidArgument("no layers to verify")
    graphs = []
    for idx, layer in enumerate(layers):
        if layer.n != g.n:
            raise InvalidArgument(f"layer {idx + 1} has {layer.n} vertices, graph has {g.n}")
        graphs.append(layer.graph())
    superset = tuple(bool(np.all(h.adjacency | ~g.adjacency)) for h in graphs)
    return LayerReport(
        superset_ok=superset,
        intersection_ok=edge_intersection(graphs) == g,
        diameters=tuple(diameter(h) for h in graphs),
    )
