"""Isomorphism-free generation of small connected graphs and extremal search.

Generation is by vertex augmentation. Every connected graph has a vertex
whose deletion leaves it connected; among those non-cut vertices the one
with the least invariant ``(degree, sorted neighbor degrees)`` is declared
"last", so a child is accepted only when the added vertex attains that
least invariant. This rejects most candidates before canonicalization;
survivors are deduplicated by canonical code. Trees and unicyclic graphs
grow by attaching a leaf, since each such graph (other than a cycle) has one.

``connected_graphs_labeled`` is the independent oracle for small orders:
it walks every labeled graph and takes the minimum adjacency bit string
over all n! relabelings, vectorized with numpy.
"""

from __future__ import annotations

import enum
import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .canon import canonical_code, canonical_form
from .errors import CapExceededError, EmptyClassError, ParameterError
from .formats import decode_graph6, encode_graph6
from .graph import Graph, _bits
from .index import RadicalSum, sombor_exact, sombor_index

GENERAL_MAX_ORDER = 9
SPARSE_MAX_ORDER = 12  # trees and unicyclic graphs
LABELED_MAX_ORDER = 6


class Universe(enum.Enum):
    GENERAL = "general"
    TREES = "trees"
    UNICYCLIC = "unicyclic"


class Objective(enum.Enum):
    MIN = "min"
    MAX = "max"


def _cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceededError(f"{what} is capped at n <= {cap}, got n={n}")
    if n < 1:
        raise ParameterError(f"order must be >= 1, got {n}")


# -- augmentation ---------------------------------------------------------------

def _last_vertex_ok(rows: list[int], n: int, new: int) -> bool:
    """True when ``new`` has the least invariant among non-cut vertices."""
    deg = [r.bit_count() for r in rows]

    def inv(v):
        return deg[v], tuple(sorted(deg[w] for w in _bits(rows[v])))

    target = inv(new)
    full = (1 << n) - 1
    for v in range(n):
        if v == new or deg[v] > target[0]:
            continue
        if inv(v) < target and _connected_without(rows, n, v, full):
            return False
    return True


def _connected_without(rows, n, v, full) -> bool:
    start = 0 if v != 0 else 1
    removed = 1 << v
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~removed & ~seen
        seen |= frontier
    return seen == full & ~removed


def _extend_general(g6_parents: list[str]) -> set[bytes]:
    codes = set()
    for text in g6_parents:
        parent = decode_graph6(text)
        m = parent.n
        n = m + 1
        for subset in range(1, 1 << m):
            rows = list(parent.rows)
            for u in _bits(subset):
                rows[u] |= 1 << m
            rows.append(subset)
            if _last_vertex_ok(rows, n, m):
                codes.add(canonical_code(Graph(n, rows)))
    return codes


def _extend_by_leaf(g6_parents: list[str]) -> set[bytes]:
    codes = set()
    for text in g6_parents:
        parent = decode_graph6(text)
        m = parent.n
        for u in range(m):
            rows = list(parent.rows)
            rows[u] |= 1 << m
            rows.append(1 << u)
            codes.add(canonical_code(Graph(m + 1, rows)))
    return codes


def _chunks(items: list, parts: int) -> list[list]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def _grow(parents: tuple[Graph, ...], step: Callable, workers: int) -> tuple[Graph, ...]:
    texts = [encode_graph6(G) for G in parents]
    if workers <= 1 or len(texts) < 2 * workers:
        codes = step(texts)
    else:
        codes = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(step, _chunks(texts, 4 * workers)):
                codes |= part
    return tuple(decode_graph6(c.decode("ascii")) for c in sorted(codes))


_CONNECTED: dict[int, tuple[Graph, ...]] = {1: (Graph(1, [0]),)}


def _connected_tuple(n: int, workers: int = 1) -> tuple[Graph, ...]:
    # the result does not depend on the worker count, so one cache serves all
    if n not in _CONNECTED:
        _CONNECTED[n] = _grow(_connected_tuple(n - 1, workers), _extend_general, workers)
    return _CONNECTED[n]


@functools.lru_cache(maxsize=None)
def _trees_tuple(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    return _grow(_trees_tuple(n - 1), _extend_by_leaf, 1)


@functools.lru_cache(maxsize=None)
def _unicyclic_tuple(n: int) -> tuple[Graph, ...]:
    if n < 3:
        return ()
    cyc = canonical_form(Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)]))
    grown = _grow(_unicyclic_tuple(n - 1), _extend_by_leaf, 1) if n > 3 else ()
    return tuple(sorted(set(grown) | {cyc}, key=encode_graph6))


def connected_graphs(n: int, workers: int = 1) -> Iterator[Graph]:
    """One canonically labeled representative per connected isomorphism class."""
    _cap(n, GENERAL_MAX_ORDER, "connected graph generation")
    return iter(_connected_tuple(n, workers))


def trees(n: int) -> Iterator[Graph]:
    _cap(n, SPARSE_MAX_ORDER, "tree generation")
    return iter(_trees_tuple(n))


def unicyclic_graphs(n: int) -> Iterator[Graph]:
    _cap(n, SPARSE_MAX_ORDER, "unicyclic generation")
    return iter(_unicyclic_tuple(n))


# -- labeled-exhaustion oracle -------------------------------------------------------

def _pair_index(n: int) -> dict[tuple[int, int], int]:
    """Bit position of pair (i, j), i < j, in graph6 column order."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    nbits = len(pairs)
    return {p: nbits - 1 - k for k, p in enumerate(pairs)}


def connected_graphs_labeled(n: int) -> list[Graph]:
    """Connected classes by brute force: every labeled graph, every relabeling."""
    _cap(n, LABELED_MAX_ORDER, "labeled exhaustion")
    if n == 1:
        return [Graph(1, [0])]
    index = _pair_index(n)
    pairs = list(index)
    nbits = len(pairs)
    codes = np.arange(1 << nbits, dtype=np.int64)
    bits = [(codes >> index[p]) & 1 for p in pairs]

    # connectivity by repeated neighborhood expansion from vertex 0
    reach = np.ones_like(codes)
    for _ in range(n):
        new = reach.copy()
        for (i, j), b in zip(pairs, bits):
            new |= (((reach >> i) & 1) & b) << j
            new |= (((reach >> j) & 1) & b) << i
        reach = new
    connected = reach == (1 << n) - 1

    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        relabeled = np.zeros_like(codes)
        for (i, j), b in zip(pairs, bits):
            a, c = perm[i], perm[j]
            relabeled |= b << index[(min(a, c), max(a, c))]
        np.minimum(best, relabeled, out=best)

    out = []
    for code in sorted(set(best[connected].tolist())):
        rows = [0] * n
        for (i, j) in pairs:
            if code >> index[(i, j)] & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        out.append(Graph(n, rows))
    return out


# -- class specs and extremal search ------------------------------------------------

@dataclass(frozen=True)
class GraphClassSpec:
    """Constraints on connected graphs of a fixed order; ``None`` means unconstrained."""

    order: int
    max_degree: Optional[int] = None
    girth: Optional[int] = None
    pendent_count: Optional[int] = None
    cut_edge_count: Optional[int] = None
    unicyclic: Optional[bool] = None
    tree: Optional[bool] = None

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ParameterError(f"order must be >= 1, got {n}")
        if self.max_degree is not None and not 0 <= self.max_degree <= n - 1:
            raise ParameterError(f"max degree {self.max_degree} impossible at order {n}")
        if self.girth is not None and not 3 <= self.girth <= n:
            raise ParameterError(f"girth {self.girth} impossible at order {n}")
        if self.pendent_count is not None and not 0 <= self.pendent_count <= n:
            raise ParameterError(f"pendent count {self.pendent_count} impossible at order {n}")
        if self.cut_edge_count is not None and not 0 <= self.cut_edge_count <= n - 1:
            raise ParameterError(f"cut-edge count {self.cut_edge_count} impossible at order {n}")
        if self.tree and self.unicyclic:
            raise ParameterError("a graph cannot be both a tree and unicyclic")
        if self.tree and self.girth is not None:
            raise ParameterError("trees have no girth")

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def matches(G: Graph, spec: GraphClassSpec) -> bool:
    if G.n != spec.order or not G.is_connected():
        return False
    if spec.max_degree is not None and G.max_degree() != spec.max_degree:
        return False
    if spec.tree is not None and G.is_tree() != spec.tree:
        return False
    if spec.unicyclic is not None and G.is_unicyclic() != spec.unicyclic:
        return False
    if spec.pendent_count is not None and len(G.pendent_vertices()) != spec.pendent_count:
        return False
    if spec.girth is not None and G.girth() != spec.girth:
        return False
    if spec.cut_edge_count is not None and len(G.bridges()) != spec.cut_edge_count:
        return False
    return True


@dataclass
class ExtremalResult:
    optimum: RadicalSum
    witnesses: list[Graph]
    class_size: int
    objective: Objective = Objective.MIN
    spec: Optional[GraphClassSpec] = None
    witness_codes: list[bytes] = field(default_factory=list)

    @property
    def optimum_float(self) -> float:
        return float(self.optimum)

    def to_json(self) -> dict:
        return {
            "optimum_float": float(self.optimum),
            "optimum_radical_terms": self.optimum.to_json(),
            "witnesses_graph6": [encode_graph6(G) for G in self.witnesses],
            "class_size": self.class_size,
        }


def universe_graphs(n: int, universe: Universe, workers: int = 1) -> Iterator[Graph]:
    universe = Universe(universe)
    if universe is Universe.GENERAL:
        return connected_graphs(n, workers)
    if universe is Universe.TREES:
        return trees(n)
    return unicyclic_graphs(n)


def _check_universe_cap(n: int, universe: Universe) -> None:
    if universe is Universe.GENERAL:
        _cap(n, GENERAL_MAX_ORDER, "the general universe")
    else:
        _cap(n, SPARSE_MAX_ORDER, f"the {universe.value} universe")


def extremal_search(
    spec: GraphClassSpec,
    objective: Objective = Objective.MIN,
    universe: Universe = Universe.GENERAL,
    workers: int = 1,
    where: Optional[Callable[[Graph], bool]] = None,
) -> ExtremalResult:
    """Exact optimum of SO over the class, with every graph attaining it.

    Floats only shortlist candidates (within a relative ``1e-9`` of the best);
    the optimum and the witness set are decided by exact comparison.
    ``where`` adds an extra membership predicate (e.g. "not a cycle").
    """
    objective, universe = Objective(objective), Universe(universe)
    _check_universe_cap(spec.order, universe)
    sign = 1.0 if objective is Objective.MIN else -1.0
    best = None
    shortlist: list[tuple[float, Graph]] = []
    size = 0
    for G in universe_graphs(spec.order, universe, workers):
        if not matches(G, spec) or (where is not None and not where(G)):
            continue
        size += 1
        value = sign * sombor_index(G)
        if best is None or value < best:
            best = value
            shortlist = [(v, H) for v, H in shortlist if v <= best + 1e-9 * max(1.0, abs(best))]
        if value <= best + 1e-9 * max(1.0, abs(best)):
            shortlist.append((value, G))
    if size == 0:
        raise EmptyClassError(f"no graph in the {universe.value} universe matches {spec}")
    exact = [(sombor_exact(G), G) for _, G in shortlist]
    pick = min if objective is Objective.MIN else max
    optimum = pick(value for value, _ in exact)
    witnesses = [G for value, G in exact if value == optimum]
    codes = [canonical_code(G) for G in witnesses]
    order = sorted(range(len(witnesses)), key=codes.__getitem__)
    return ExtremalResult(
        optimum=optimum,
        witnesses=[witnesses[i] for i in order],
        class_size=size,
        objective=objective,
        spec=spec,
        witness_codes=[codes[i] for i in order],
    )


def export_graph6(graphs: Iterable[Graph]) -> Iterator[str]:
    for G in graphs:
        yield encode_graph6(G)
