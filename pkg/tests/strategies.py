from hypothesis import strategies as st

from fixsub.graphs import Graph


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))
