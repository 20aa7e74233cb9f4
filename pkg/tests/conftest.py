import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from sombor import families as fam
from sombor.errors import ParameterError
from sombor.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edge_list(n, sorted(edges | set(extra)))


def family_cases(max_n):
    """``(graph, closed form)`` for every family constructor and valid parameter up to ``max_n``."""
    for n in range(1, max_n + 1):
        if n >= 3:
            yield fam.path(n), fam.path_so_exact(n)
            yield fam.cycle(n), fam.cycle_so_exact(n)
        for delta in range(3, n):
            for k in range(0, delta + 1):
                try:
                    specs = list(fam.star_like_specs(n, delta, k))
                except ParameterError:
                    continue
                for s in specs:
                    yield fam.star_like_tree(s), fam.star_like_so_exact(n, delta, k)
        for g in range(3, n - 1):
            yield fam.lollipop(n, g), fam.lollipop_so_exact(n)
        if n >= 4:
            yield fam.cycle_with_pendant(n), fam.cycle_with_pendant_so_exact(n)
        for g in range(3, n + 1):
            yield fam.u_n_g(n, g), fam.max_so_unicyclic_exact(n, g)
        for k in range(1, n - 2):
            yield fam.kite_with_pendants(n, k), fam.max_so_pendent_exact(n, k)
        for delta in range(3, n):
            k = max(0, 2 * delta - n + 1)
            yield fam.star_like_tree(fam.default_star_like_spec(n, delta, k)), fam.min_so_delta_bound_exact(n, delta)


@pytest.fixture
def rng():
    return random.Random(20240917)
