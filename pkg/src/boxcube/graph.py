"""Simple undirected graphs on dense vertex sets ``0..n-1``.

A :class:`Graph` is backed by a read-only boolean adjacency matrix, which
keeps the quadratic edge-set operations (intersection, equality, induced
layers) inside numpy even for a few thousand vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import InvalidArgument


class Graph:
    __slots__ = ("_adj",)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgument(f"vertex count must be non-negative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            adj[u, v] = adj[v, u] = True
        adj.flags.writeable = False
        self._adj = adj

    @classmethod
    def from_adjacency(cls, matrix) -> Graph:
        """Wrap a symmetric boolean matrix; the diagonal is ignored."""
        adj = np.array(matrix, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidArgument(f"adjacency must be square, got shape {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise InvalidArgument("adjacency must be symmetric")
        np.fill_diagonal(adj, False)
        adj.flags.writeable = False
        g = cls.__new__(cls)
        g._adj = adj
        return g

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def num_edges(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    def non_edges(self) -> list[tuple[int, int]]:
        missing = ~self._adj
        np.fill_diagonal(missing, False)
        us, vs = np.nonzero(np.triu(missing, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def induced(self, vertices: Sequence[int]) -> Graph:
        idx = np.asarray(vertices, dtype=np.intp)
        return Graph.from_adjacency(self._adj[np.ix_(idx, idx)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        if self.num_edges <= 12:
            return f"Graph(n={self.n}, edges={self.edges})"
        return f"Graph(n={self.n}, num_edges={self.num_edges})"


def star(n: int) -> Graph:
    """K_{1,n-1} with vertex 0 as the centre."""
    if n < 1:
        raise InvalidArgument(f"star needs n >= 1, got {n}")
    return Graph(n, ((0, v) for v in range(1, n)))


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidArgument(f"vertex count must be non-negative, got {n}")
    adj = np.ones((n, n), dtype=bool)
    return Graph.from_adjacency(adj)


def path(n: int) -> Graph:
    if n < 0:
        raise InvalidArgument(f"vertex count must be non-negative, got {n}")
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))


def edge_intersection(graphs: Sequence[Graph]) -> Graph:
    """The graph whose edges are present in every input graph."""
    graphs = list(graphs)
    if not graphs:
        raise InvalidArgument("edge_intersection needs at least one graph")
    n = graphs[0].n
    adj = np.ones((n, n), dtype=bool)
    for g in graphs:
        if g.n != n:
            raise InvalidArgument(f"vertex count mismatch: {g.n} != {n}")
        adj &= g.adjacency
    return Graph.from_adjacency(adj)


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def add_isolated(g: Graph, count: int) -> Graph:
    if count < 0:
        raise InvalidArgument(f"count must be non-negative, got {count}")
    n = g.n
    adj = np.zeros((n + count, n + count), dtype=bool)
    adj[:n, :n] = g.adjacency
    return Graph.from_adjacency(adj)


@dataclass(frozen=True)
class DiameterReport:
    """Diameters of the connected components, listed in order of smallest vertex.

    ``diameter`` is the maximum over components; a disconnected graph has
    ``connected=False`` instead of an infinite diameter.
    """

    diameter: int
    component_diameters: tuple[int, ...]
    connected: bool


def diameter(g: Graph) -> DiameterReport:
    if g.n == 0:
        return DiameterReport(0, (), True)
    sparse = csr_matrix(g.adjacency)
    ncomp, labels = connected_components(sparse, directed=False)
    dist = shortest_path(sparse, directed=False, unweighted=True)
    # components are labelled in order of their smallest vertex
    per_comp = []
    for c in range(ncomp):
        members = np.flatnonzero(labels == c)
        per_comp.append(int(dist[np.ix_(members, members)].max()))
    return DiameterReport(max(per_comp), tuple(per_comp), ncomp == 1)
