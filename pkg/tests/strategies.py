from hypothesis import strategies as st

from boxcube import Graph, IntervalRepresentation


@st.composite
def graphs(draw, n=None, max_n=7):
    if n is None:
        n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def interval_reps(draw, min_n=1, max_n=9):
    """Small interval representations with rational endpoints (halves and thirds)."""
    n = draw(st.integers(min_n, max_n))
    coords = st.fractions(min_value=0, max_value=6, max_denominator=3)
    intervals = []
    for _ in range(n):
        a, b = draw(coords), draw(coords)
        intervals.append((min(a, b), max(a, b)))
    return IntervalRepresentation(tuple(intervals))
