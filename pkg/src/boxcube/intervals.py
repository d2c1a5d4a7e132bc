"""Interval and unit-interval representations, vertex orderings, and the
factorial-time recognizers used as oracles on tiny graphs.

Endpoints are exact :class:`fractions.Fraction` values. Closed intervals that
merely touch intersect.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, SizeLimitExceeded
from .graph import Graph

DEFAULT_RECOGNIZER_LIMIT = 8
LIMIT_ENV_VAR = "BOXCUBE_BRUTE_LIMIT"


def brute_limit(limit: int | None, default: int) -> int:
    """Resolve a size limit: explicit argument, then the environment, then ``default``."""
    if limit is not None:
        return limit
    env = os.environ.get(LIMIT_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidArgument(f"{LIMIT_ENV_VAR} must be an integer, got {env!r}") from None
    return default


def _check_limit(n: int, limit: int | None, default: int) -> None:
    lim = brute_limit(limit, default)
    if n > lim:
        raise SizeLimitExceeded(f"n={n} exceeds brute-force limit {lim}")


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        fixed = []
        for v, (lo, hi) in enumerate(self.intervals):
            lo, hi = Fraction(lo), Fraction(hi)
            if lo > hi:
                raise InvalidArgument(f"interval of vertex {v} has l > r: [{lo}, {hi}]")
            fixed.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(fixed))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> IntervalRepresentation:
        return cls(tuple(tuple(p) for p in pairs))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def endpoint_ranks(self) -> tuple[np.ndarray, np.ndarray]:
        """Integer ranks of left and right endpoints among all distinct endpoints.

        Ranks preserve every order relation between endpoints, so overlap
        decisions made on ranks are exact.
        """
        values = sorted({x for iv in self.intervals for x in iv})
        rank = {x: i for i, x in enumerate(values)}
        left = np.fromiter((rank[lo] for lo, _ in self.intervals), dtype=np.int64, count=self.n)
        right = np.fromiter((rank[hi] for _, hi in self.intervals), dtype=np.int64, count=self.n)
        return left, right


@dataclass(frozen=True)
class UnitIntervalRepresentation:
    """Intervals ``[anchors[v], anchors[v] + length]`` sharing one length."""

    anchors: tuple
    length: Fraction

    def __post_init__(self):
        if Fraction(self.length) <= 0:
            raise InvalidArgument(f"length must be positive, got {self.length}")

    @property
    def n(self) -> int:
        return len(self.anchors)

    def to_interval_rep(self) -> IntervalRepresentation:
        return IntervalRepresentation(tuple((a, a + self.length) for a in self.anchors))

    def graph(self) -> Graph:
        a = self.anchors
        if all(isinstance(x, int) for x in a) and isinstance(self.length, int):
            arr = np.asarray(a, dtype=np.int64)
            adj = np.abs(arr[:, None] - arr[None, :]) <= self.length
            return Graph.from_adjacency(adj)
        return intersection_graph_of_intervals(self.to_interval_rep())


@dataclass(frozen=True)
class VertexOrdering:
    """A bijection ``f`` from vertices to positions ``1..n``; ``positions[v] = f(v)``."""

    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        if sorted(self.positions) != list(range(1, len(self.positions) + 1)):
            raise InvalidArgument(f"not a bijection onto 1..n: {self.positions}")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> VertexOrdering:
        """Build from the vertex sequence in position order."""
        positions = [0] * len(order)
        for p, v in enumerate(order, start=1):
            positions[v] = p
        return cls(tuple(positions))

    @property
    def n(self) -> int:
        return len(self.positions)

    @property
    def order(self) -> list[int]:
        order = [0] * self.n
        for v, p in enumerate(self.positions):
            order[p - 1] = v
        return order

    def __call__(self, v: int) -> int:
        return self.positions[v]


def intersection_graph_of_intervals(rep: IntervalRepresentation) -> Graph:
    left, right = rep.endpoint_ranks()
    adj = (left[:, None] <= right[None, :]) & (left[None, :] <= right[:, None])
    return Graph.from_adjacency(adj)


def left_endpoint_ordering(rep: IntervalRepresentation) -> VertexOrdering:
    """Order by left endpoint, breaking ties by right endpoint, then vertex id."""
    ivs = rep.intervals
    order = sorted(range(rep.n), key=lambda v: (ivs[v][0], ivs[v][1], v))
    return VertexOrdering.from_order(order)


def _positional_adjacency(g: Graph, f: VertexOrdering) -> np.ndarray:
    order = np.asarray(f.order, dtype=np.intp)
    return g.adjacency[np.ix_(order, order)]


def check_ordering_property(g: Graph, f: VertexOrdering) -> bool:
    """True iff f(u) < f(w) < f(v) and uv an edge always forces uw an edge.

    Equivalently, each vertex's neighbours after it occupy a contiguous run of
    positions starting right after it.
    """
    if f.n != g.n:
        raise InvalidArgument(f"ordering has {f.n} vertices, graph has {g.n}")
    n = g.n
    if n < 3:
        return True
    later = np.triu(_positional_adjacency(g, f), 1)
    counts = later.sum(axis=1)
    has_later = counts > 0
    farthest = n - 1 - np.argmax(later[:, ::-1], axis=1)
    rows = np.arange(n)
    return bool(np.all(~has_later | (counts == farthest - rows)))


def ordering_to_interval_rep(g: Graph, f: VertexOrdering) -> IntervalRepresentation:
    """Interval ``[f(u), m(u)]`` per vertex, m(u) the farthest later neighbour's position."""
    if not check_ordering_property(g, f):
        raise InvalidArgument("ordering does not satisfy the interval ordering property")
    intervals = []
    for u in range(g.n):
        fu = f(u)
        m = max([fu] + [f(v) for v in g.neighbors(u) if f(v) > fu])
        intervals.append((Fraction(fu), Fraction(m)))
    return IntervalRepresentation(tuple(intervals))


def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in g.neighbors(u)) for u in range(g.n)]


def _search_ordering(nbr: list[int], two_sided: bool) -> list[int] | None:
    """Lexicographically first vertex sequence with the ordering property.

    Exhausts all n! sequences, pruning a prefix as soon as it is doomed: a
    vertex that already has a non-neighbour placed after it may not acquire a
    later neighbour. With ``two_sided`` the placed vertex's earlier neighbours
    must also form a suffix of the prefix.
    """
    n = len(nbr)
    full = (1 << n) - 1
    seq: list[int] = []

    def extend(placed: int, closed: int) -> bool:
        if placed == full:
            return True
        for w in range(n):
            bit = 1 << w
            if placed & bit or nbr[w] & closed:
                continue
            if two_sided:
                c = bin(nbr[w] & placed).count("1")
                if not all(nbr[w] >> x & 1 for x in seq[len(seq) - c:]):
                    continue
            # every placed vertex not adjacent to w is closed from now on
            new_closed = closed | (placed & ~nbr[w])
            seq.append(w)
            if extend(placed | bit, new_closed):
                return True
            seq.pop()
        return False

    return list(seq) if extend(0, 0) else None


def recognize_interval_brute(g: Graph, limit: int | None = None) -> VertexOrdering | None:
    """Some ordering with the interval ordering property, or ``None`` if none exists."""
    _check_limit(g.n, limit, DEFAULT_RECOGNIZER_LIMIT)
    seq = _search_ordering(_neighbor_masks(g), two_sided=False)
    return None if seq is None else VertexOrdering.from_order(seq)


def find_unit_interval_ordering(g: Graph, limit: int | None = None) -> VertexOrdering | None:
    """Ordering in which every closed neighbourhood is a contiguous run of positions."""
    _check_limit(g.n, limit, DEFAULT_RECOGNIZER_LIMIT)
    seq = _search_ordering(_neighbor_masks(g), two_sided=True)
    return None if seq is None else VertexOrdering.from_order(seq)


def recognize_unit_interval_brute(g: Graph, limit: int | None = None) -> bool:
    return find_unit_interval_ordering(g, limit) is not None


def unit_interval_rep_from_ordering(g: Graph, f: VertexOrdering) -> UnitIntervalRepresentation:
    """Integer unit-interval representation from a two-sided (umbrella) ordering.

    Solves the difference constraints x[i] <= x[i+1], x[r(i)] - x[i] <= L and
    x[r(i)+1] - x[i] >= L + 1 with Bellman-Ford, where r(i) is the farthest
    neighbour position of position i. L starts at n and doubles on failure.
    """
    n = g.n
    if n == 0:
        return UnitIntervalRepresentation((), 1)
    order = f.order
    padj = _positional_adjacency(g, f)
    reach = []
    for i in range(n):
        later = np.flatnonzero(padj[i, i:])
        reach.append(i + int(later[-1]) if later.size else i)

    length = max(n, 1)
    for _ in range(8):
        # edge (a, b, w) encodes x[b] - x[a] <= w
        cons = [(i + 1, i, 0) for i in range(n - 1)]
        for i, r in enumerate(reach):
            cons.append((i, r, length))
            if r + 1 < n:
                cons.append((r + 1, i, -(length + 1)))
        dist = [0] * n
        for _ in range(n + 1):
            changed = False
            for a, b, w in cons:
                if dist[a] + w < dist[b]:
                    dist[b] = dist[a] + w
                    changed = True
            if not changed:
                break
        if not changed:
            lo = min(dist)
            anchors = [0] * n
            for i, v in enumerate(order):
                anchors[v] = dist[i] - lo
            rep = UnitIntervalRepresentation(tuple(anchors), length)
            if rep.graph() == g:
                return rep
        length *= 2
    raise InvalidArgument("ordering is not a unit-interval (umbrella) ordering of the graph")


def random_interval_rep(n: int, rng: np.random.Generator) -> IntervalRepresentation:
    """n intervals with integer endpoints drawn uniformly from [1, 2n]."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    pts = np.sort(rng.integers(1, 2 * n + 1, size=(n, 2)), axis=1)
    return IntervalRepresentation(tuple((Fraction(int(a)), Fraction(int(b))) for a, b in pts))
