"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from heawood.coloring import ListAssignment
from heawood.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    """Labelled simple graphs."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {p for p, k in zip(pairs, keep) if k}
    return Graph(n, sorted(edges))


@st.composite
def list_assignments(draw, n, max_size=4, palette=6, min_size=0):
    return ListAssignment(
        draw(st.lists(st.sets(st.integers(0, palette - 1), min_size=min_size, max_size=max_size),
                      min_size=n, max_size=n)))
