"""Independent reference computations for the test-suite.

Nothing here imports the code under test beyond the Graph container; every
check is a direct pairwise or exhaustive evaluation.
"""

from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from boxcube.graph import Graph


def pairs(n):
    return list(combinations(range(n), 2))


def interval_graph(intervals):
    n = len(intervals)
    edges = []
    for u, v in pairs(n):
        (a, b), (c, d) = intervals[u], intervals[v]
        if max(Fraction(a), Fraction(c)) <= min(Fraction(b), Fraction(d)):
            edges.append((u, v))
    return Graph(n, edges)


def box_graph(boxes):
    n = len(boxes)
    edges = []
    for u, v in pairs(n):
        if all(max(a, c) <= min(b, d) for (a, b), (c, d) in zip(boxes[u], boxes[v])):
            edges.append((u, v))
    return Graph(n, edges)


def cube_graph(anchors, side):
    """Pairwise test of cubes [a, a + side] in every dimension, in exact arithmetic."""
    n = len(anchors)
    edges = []
    for u, v in pairs(n):
        if all(max(a, b) <= min(a, b) + side for a, b in zip(anchors[u], anchors[v])):
            edges.append((u, v))
    return Graph(n, edges)


def ordering_property(g, positions):
    """All triples u, w, v with f(u) < f(w) < f(v) and uv an edge have uw an edge."""
    order = sorted(range(g.n), key=lambda v: positions[v])
    for i, j, k in combinations(range(g.n), 3):
        u, w, v = order[i], order[j], order[k]
        if g.has_edge(u, v) and not g.has_edge(u, w):
            return False
    return True


def graph_from_mask(n, mask):
    return Graph(n, [e for idx, e in enumerate(pairs(n)) if mask >> idx & 1])


def mask_of(g):
    return sum(1 << idx for idx, (u, v) in enumerate(pairs(g.n)) if g.has_edge(u, v))


def all_graphs(n):
    for mask in range(1 << len(pairs(n))):
        yield graph_from_mask(n, mask)


def relabelings(g):
    """Masks of all vertex relabelings of g."""
    n = g.n
    out = set()
    for perm in permutations(range(n)):
        out.add(sum(1 << idx for idx, (u, v) in enumerate(pairs(n)) if g.has_edge(perm[u], perm[v])))
    return out


def realizable_interval_masks(n):
    """Labelled graphs realized by n intervals with integer endpoints in {1..2n}.

    Only non-decreasing tuples of intervals are enumerated; any other
    assignment is a relabeling of one of them, which callers account for by
    testing every relabeling of a query graph.
    """
    if n == 0:
        return {0}
    ivs = [(lo, hi) for lo in range(1, 2 * n + 1) for hi in range(lo, 2 * n + 1)]
    lo = np.array([a for a, _ in ivs])
    hi = np.array([b for _, b in ivs])
    overlap = (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
    m = len(ivs)
    tuples = np.arange(m, dtype=np.uint8)[:, None]
    for _ in range(n - 1):
        last = tuples[:, -1].astype(np.int64)
        counts = m - last
        starts = np.cumsum(counts) - counts
        total = int(counts.sum())
        new = np.repeat(last, counts) + (np.arange(total) - np.repeat(starts, counts))
        tuples = np.column_stack([np.repeat(tuples, counts, axis=0), new.astype(np.uint8)])
    masks = np.zeros(len(tuples), dtype=np.int64)
    for idx, (u, v) in enumerate(pairs(n)):
        masks |= overlap[tuples[:, u], tuples[:, v]].astype(np.int64) << idx
    return set(np.unique(masks).tolist())


def has_induced_claw(g):
    for c in range(g.n):
        nb = g.neighbors(c)
        for a, b, d in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return True
    return False
