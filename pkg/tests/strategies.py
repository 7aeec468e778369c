"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from projlink.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, min_m=0, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if len(pairs) < min_m:
        n = max_n
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=min_m, unique=True)) if pairs else []
    g = Graph.from_edges(n, chosen)
    if connected:
        # chain the components together so the graph is connected
        comps = g.components()
        extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
        g = Graph.from_edges(n, list(chosen) + extra)
    return g
