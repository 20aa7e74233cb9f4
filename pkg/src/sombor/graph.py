"""Immutable small simple graphs stored as per-vertex adjacency bitsets.

Vertices are the integers ``0..n-1``. Row ``v`` of the adjacency is an int
whose bit ``u`` is set when ``uv`` is an edge. Every method is a pure query;
the two surgeries used by the extremal arguments return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    CutEdgeError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    LoopError,
    PendentPathError,
    VertexRangeError,
)

MAX_ORDER = 128

Edge = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on ``n <= 128`` vertices."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if not 1 <= n <= MAX_ORDER:
            raise VertexRangeError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(rows) != n:
            raise VertexRangeError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise VertexRangeError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise LoopError(f"loop at vertex {v}")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise VertexRangeError(f"adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.rows = rows
        self._hash = hash((n, rows))

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from vertex pairs; loops and repeated edges are errors."""
        if not 1 <= n <= MAX_ORDER:
            raise VertexRangeError(f"order must be in 1..{MAX_ORDER}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    # -- structure ---------------------------------------------------------

    def component_mask(self, start: int = 0, removed: int = 0) -> int:
        """Bitmask of vertices reachable from ``start`` avoiding ``removed``."""
        seen = 1 << start
        frontier = seen
        allowed = ~removed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self.component_mask() == (1 << self.n) - 1

    def num_components(self) -> int:
        left = (1 << self.n) - 1
        count = 0
        while left:
            start = (left & -left).bit_length() - 1
            left &= ~self.component_mask(start)
            count += 1
        return count

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle, or ``None`` for a forest."""
        best = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = deque([root])
            while queue:
                v = queue.popleft()
                if best is not None and 2 * dist[v] >= best:
                    break
                for w in _bits(self.rows[v]):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        length = dist[v] + dist[w] + 1
                        if best is None or length < best:
                            best = length
        return best

    def bridges(self) -> set[Edge]:
        """Cut edges of a connected graph, each as ``(u, v)`` with ``u < v``."""
        if not self.is_connected():
            raise DisconnectedGraphError("bridges() requires a connected graph")
        disc = [-1] * self.n
        low = [0] * self.n
        found: set[Edge] = set()
        clock = 0
        # iterative DFS: stack of (vertex, parent, remaining-neighbor mask)
        disc[0] = low[0] = clock
        stack = [(0, -1, self.rows[0])]
        while stack:
            v, p, todo = stack[-1]
            if todo:
                w = (todo & -todo).bit_length() - 1
                stack[-1] = (v, p, todo & (todo - 1))
                if w == p:
                    continue
                if disc[w] == -1:
                    clock += 1
                    disc[w] = low[w] = clock
                    stack.append((w, v, self.rows[w]))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if p >= 0:
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        found.add((min(p, v), max(p, v)))
        return found

    def pendent_vertices(self) -> set[int]:
        return {v for v, row in enumerate(self.rows) if row.bit_count() == 1}

    def is_tree(self) -> bool:
        return self.size == self.n - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.size == self.n and self.is_connected()

    def pendent_paths(self) -> list["PendentPath"]:
        """Every maximal pendent path, ordered by origin then first vertex."""
        deg = self.degrees()
        paths = []
        for leaf in range(self.n):
            if deg[leaf] != 1:
                continue
            chain = [leaf]
            prev, cur = leaf, self.neighbors(leaf)[0]
            while deg[cur] == 2:
                chain.append(cur)
                nxt = self.rows[cur] & ~(1 << prev)
                prev, cur = cur, nxt.bit_length() - 1
            if deg[cur] >= 3:
                paths.append(PendentPath(cur, tuple(reversed(chain))))
        paths.sort(key=lambda p: (p.origin, p.vertices[0]))
        return paths

    # -- edits -------------------------------------------------------------

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise VertexRangeError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise VertexRangeError("relabel needs a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            rows[perm[v]] = new
        return Graph(self.n, rows)


@dataclass(frozen=True)
class PendentPath:
    """Path ``origin, u_1, ..., u_k`` with deg(origin) >= 3, inner degrees 2, deg(u_k) = 1."""

    origin: int
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def tip(self) -> int:
        return self.vertices[-1]

    def is_valid_in(self, G: Graph) -> bool:
        if not self.vertices or not 0 <= self.origin < G.n:
            return False
        if any(not 0 <= v < G.n for v in self.vertices):
            return False
        if G.degree(self.origin) < 3 or G.degree(self.tip) != 1:
            return False
        if any(G.degree(v) != 2 for v in self.vertices[:-1]):
            return False
        walk = (self.origin,) + self.vertices
        return all(G.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def transform_path_shift(G: Graph, P: PendentPath, Q: PendentPath) -> Graph:
    """Detach pendent path ``P`` at its origin and hang it from the tip of ``Q``.

    With ``x`` the first vertex of ``P`` and ``y`` the tip of ``Q`` this is
    ``G - ux + xy``.
    """
    for path in (P, Q):
        if not path.is_valid_in(G):
            raise PendentPathError(f"{path} is not a pendent path of the graph")
    if P == Q:
        raise PendentPathError("P and Q must be distinct pendent paths")
    x, y = P.vertices[0], Q.tip
    if x == y:
        raise PendentPathError("shift would create a loop (x == y)")
    return G.remove_edge(P.origin, x).add_edge(x, y)


def transform_contract_pendant(G: Graph, edge: Edge) -> Graph:
    """Contract the cut edge ``uv`` onto ``u`` and re-attach ``v`` as a pendant of ``u``."""
    u, v = edge
    if not G.has_edge(u, v):
        raise CutEdgeError(f"({u}, {v}) is not an edge")
    if G.degree(u) < 2 or G.degree(v) < 2:
        raise CutEdgeError(f"({u}, {v}) is a pendent edge")
    if (min(u, v), max(u, v)) not in G.bridges():
        raise CutEdgeError(f"({u}, {v}) is not a cut edge")
    rows = list(G.rows)
    moved = rows[v] & ~(1 << u)
    for w in _bits(moved):
        rows[w] = rows[w] & ~(1 << v) | (1 << u)
    rows[u] |= moved
    rows[v] = 1 << u
    return Graph(G.n, rows)
