"""Canonical labeling of small graphs.

The canonical form is the relabeling whose upper-triangle adjacency bit
string (graph6 column order) is smallest among all leaves of an
individualization-refinement search tree. Refinement is label-independent,
so isomorphic inputs reach the same set of leaf strings and hence the same
minimum. Two prunings keep the tree small without changing that minimum:

* twins (vertices with equal neighborhoods apart from each other) are
  interchangeable, so only one representative per twin class is branched on;
* automorphisms discovered as repeated leaf strings merge root-level orbits.

``canonical_code_bruteforce`` minimizes the same bit string over all n!
permutations and exists as a reference for tests.
"""

from __future__ import annotations

from itertools import permutations

from .errors import CapExceededError
from .graph import Graph

CANON_MAX_ORDER = 12
BRUTEFORCE_MAX_ORDER = 8


def _code_for_order(rows, order) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _refine(rows, cells):
    """Refine an ordered partition until it is equitable."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                row = rows[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _twin_representatives(rows, cell):
    reps = []
    for v in cell:
        for r in reps:
            if rows[v] & ~(1 << r) == rows[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


class _Search:
    def __init__(self, rows):
        self.rows = rows
        self.best_code = None
        self.best_order = None
        self.leaves = {}
        self.autos = []

    def run(self, cells, depth=0):
        cells = _refine(self.rows, cells)
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            self._leaf([c[0] for c in cells])
            return
        target = cells[idx]
        reps = _twin_representatives(self.rows, target)
        # orbit pruning is only applied at the root, where every automorphism
        # of the graph preserves the (label-independent) partition
        parent = {v: v for v in reps}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        seen_autos = 0
        explored = []
        for v in reps:
            if depth == 0:
                for auto in self.autos[seen_autos:]:
                    for a in reps:
                        b = auto[a]
                        if b in parent:
                            ra, rb = find(a), find(b)
                            if ra != rb:
                                parent[max(ra, rb)] = min(ra, rb)
                seen_autos = len(self.autos)
                if any(find(v) == find(e) for e in explored):
                    continue
            rest = [w for w in target if w != v]
            self.run(cells[:idx] + [[v], rest] + cells[idx + 1:], depth + 1)
            explored.append(v)

    def _leaf(self, order):
        code = _code_for_order(self.rows, order)
        previous = self.leaves.get(code)
        if previous is None:
            self.leaves[code] = order
        else:
            # both orders yield the same labeled graph, so previous[i] -> order[i] is an automorphism
            self.autos.append(dict(zip(previous, order)))
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order


def canonical_order(G: Graph) -> list[int]:
    """Vertex order of the canonical relabeling: position ``i`` holds old vertex ``order[i]``."""
    if G.n > CANON_MAX_ORDER:
        raise CapExceededError(f"canonical labeling is capped at n <= {CANON_MAX_ORDER}, got {G.n}")
    if G.n == 1:
        return [0]
    degs = G.degrees()
    by_degree = {}
    for v, d in enumerate(degs):
        by_degree.setdefault(d, []).append(v)
    search = _Search(G.rows)
    search.run([by_degree[d] for d in sorted(by_degree)])
    return search.best_order


def canonical_form(G: Graph) -> Graph:
    order = canonical_order(G)
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return G.relabel(perm)


def canonical_code(G: Graph) -> bytes:
    """graph6 bytes of the canonical relabeling of ``G``."""
    from .formats import encode_graph6

    return encode_graph6(canonical_form(G)).encode("ascii")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if max(G.n, H.n) > CANON_MAX_ORDER:
        raise CapExceededError(f"canonical labeling is capped at n <= {CANON_MAX_ORDER}")
    if G.n != H.n or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_code(G) == canonical_code(H)


def canonical_code_bruteforce(G: Graph) -> tuple[int, int]:
    """Minimum adjacency bit string over every vertex permutation, as ``(n, bits)``."""
    if G.n > BRUTEFORCE_MAX_ORDER:
        raise CapExceededError(f"brute-force canonical code is capped at n <= {BRUTEFORCE_MAX_ORDER}")
    return G.n, min(_code_for_order(G.rows, order) for order in permutations(range(G.n)))
