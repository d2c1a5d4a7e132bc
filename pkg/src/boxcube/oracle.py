"""Exact boxicity and cubicity of tiny graphs by exhaustive search.

A graph G has boxicity (cubicity) at most b iff its edge set is the
intersection of the edge sets of b interval (unit-interval) graphs on the same
vertices. Each such graph is a supergraph H of G, and what it contributes is
the set of G's non-edges it leaves out. The search is therefore a set cover of
G's non-edges by the "left-out" sets of all interval (unit-interval)
supergraphs, solved by iterative deepening on b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import InvalidArgument, SizeLimitExceeded
from .graph import Graph, edge_intersection, is_complete
from .intervals import (
    IntervalRepresentation,
    UnitIntervalRepresentation,
    _search_ordering,
    VertexOrdering,
    brute_limit,
    intersection_graph_of_intervals,
    ordering_to_interval_rep,
    recognize_interval_brute,
    recognize_unit_interval_brute,
    unit_interval_rep_from_ordering,
)

DEFAULT_ORACLE_LIMIT = 6
DEFAULT_MAX_B = 4

Witness = Union[IntervalRepresentation, UnitIntervalRepresentation]


@dataclass(frozen=True)
class OracleResult:
    parameter: str
    value: int | None
    exceeded: bool
    witness: tuple[Witness, ...] = ()


@lru_cache(maxsize=1 << 17)
def _ordering_for(nbr: tuple[int, ...], two_sided: bool) -> tuple[int, ...] | None:
    seq = _search_ordering(list(nbr), two_sided)
    return None if seq is None else tuple(seq)


def _graph_from_masks(nbr: tuple[int, ...]) -> Graph:
    n = len(nbr)
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if nbr[u] >> v & 1))


def _edge_masks(g: Graph) -> list[int]:
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def _supergraph(base: list[int], missing: list[tuple[int, int]], left_out: int) -> tuple[int, ...]:
    nbr = list(base)
    for idx, (u, v) in enumerate(missing):
        if not left_out >> idx & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    return tuple(nbr)


def _candidate_covers(g: Graph, two_sided: bool) -> tuple[list[tuple[int, int]], dict[int, tuple[int, ...]]]:
    """Left-out sets (bitmasks over G's non-edges) of all recognizable supergraphs.

    Maps each left-out set to the recognizing vertex sequence of its supergraph.
    """
    missing = g.non_edges()
    base = _edge_masks(g)
    found = {}
    for left_out in range(1, 1 << len(missing)):
        seq = _ordering_for(_supergraph(base, missing, left_out), two_sided)
        if seq is not None:
            found[left_out] = seq
    return missing, found


def _maximal(covers: list[int], width: int) -> list[int]:
    """Covers not strictly contained in another cover (superset-sum DP)."""
    present = [False] * (1 << width)
    for c in covers:
        present[c] = True
    above = list(present)
    for bit in range(width):
        for m in range(1 << width):
            if not m >> bit & 1 and above[m | 1 << bit]:
                above[m] = True
    return [c for c in covers if not any(not c >> b & 1 and above[c | 1 << b] for b in range(width))]


def _cover(universe: int, covers: list[int], depth: int) -> list[int] | None:
    best = max(bin(c).count("1") for c in covers)

    def go(uncovered: int, depth: int) -> list[int] | None:
        if uncovered == 0:
            return []
        if depth == 0 or depth * best < bin(uncovered).count("1"):
            return None
        low = uncovered & -uncovered
        for c in covers:
            if c & low:
                rest = go(uncovered & ~c, depth - 1)
                if rest is not None:
                    return [c] + rest
        return None

    return go(universe, depth)


def _oracle(g: Graph, max_b: int, limit: int | None, parameter: str) -> OracleResult:
    lim = brute_limit(limit, DEFAULT_ORACLE_LIMIT)
    if g.n > lim:
        raise SizeLimitExceeded(f"n={g.n} exceeds oracle limit {lim}")
    if max_b < 0:
        raise InvalidArgument(f"max_b must be non-negative, got {max_b}")
    if is_complete(g):
        return OracleResult(parameter, 0, False, ())

    two_sided = parameter == "cubicity"
    missing, found = _candidate_covers(g, two_sided)
    covers = sorted(_maximal(list(found), len(missing)))
    universe = (1 << len(missing)) - 1
    for b in range(1, max_b + 1):
        chosen = _cover(universe, covers, b)
        if chosen is None:
            continue
        base = _edge_masks(g)
        witness = []
        for c in chosen:
            h = _graph_from_masks(_supergraph(base, missing, c))
            f = VertexOrdering.from_order(found[c])
            if two_sided:
                witness.append(unit_interval_rep_from_ordering(h, f))
            else:
                witness.append(ordering_to_interval_rep(h, f))
        return OracleResult(parameter, b, False, tuple(witness))
    return OracleResult(parameter, None, True, ())


def cubicity_oracle(g: Graph, max_b: int = DEFAULT_MAX_B, limit: int | None = None) -> OracleResult:
    """Smallest b <= max_b with E(G) an intersection of b unit-interval graph edge sets."""
    return _oracle(g, max_b, limit, "cubicity")


def boxicity_oracle(g: Graph, max_b: int = DEFAULT_MAX_B, limit: int | None = None) -> OracleResult:
    """Smallest b <= max_b with E(G) an intersection of b interval graph edge sets."""
    return _oracle(g, max_b, limit, "boxicity")


def _witness_graph(w: Witness) -> Graph:
    if isinstance(w, UnitIntervalRepresentation):
        return w.graph()
    return intersection_graph_of_intervals(w)


def verify_witness(g: Graph, result: OracleResult, limit: int | None = None) -> bool:
    """Re-derive the witness graphs and check they reproduce G exactly."""
    if result.exceeded:
        return result.value is None and not result.witness
    if result.value != len(result.witness):
        return False
    if result.value == 0:
        return is_complete(g)
    graphs = [_witness_graph(w) for w in result.witness]
    if any(h.n != g.n for h in graphs) or edge_intersection(graphs) != g:
        return False
    if result.parameter == "cubicity":
        if not all(isinstance(w, UnitIntervalRepresentation) for w in result.witness):
            return False
        return all(recognize_unit_interval_brute(h, limit) for h in graphs)
    return all(recognize_interval_brute(h, limit) is not None for h in graphs)
