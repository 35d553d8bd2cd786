"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from qwsearch.graph import BipartiteSpec, Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return Graph(n, frozenset(edges))


@st.composite
def bipartite_specs(draw, max_side: int = 48) -> BipartiteSpec:
    n1 = draw(st.integers(1, max_side))
    n2 = draw(st.integers(1, max_side))
    k1 = draw(st.integers(0, n1))
    k2 = draw(st.integers(0, n2))
    if k1 + k2 == 0:
        k1 = 1
    return BipartiteSpec(n1, n2, k1, k2)
