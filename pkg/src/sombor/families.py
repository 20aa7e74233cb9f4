"""Extremal graph families and the closed-form Sombor values attached to them.

Labeling conventions are fixed so graph6 fixtures stay stable: the hub (the
vertex of maximum degree) is vertex 0, cycle vertices are ``0..g-1`` in cyclic
order, clique vertices are ``0..c-1``, and the remaining vertices follow in
construction order.

Every ``*_so`` / ``*_bound`` function evaluates its formula directly and never
builds a graph, so ``formula == sombor_exact(construction)`` is a genuine check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import ParameterError
from .graph import Graph
from .index import RadicalSum, theta, theta_exact

SQRT2 = math.sqrt(2)
SQRT5 = math.sqrt(5)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


# -- basic graphs -------------------------------------------------------------

def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    _need(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _attach_path(edges: list, start: int, anchor: int, length: int) -> int:
    """Append a path of ``length`` new vertices hanging from ``anchor``; return next free id."""
    prev = anchor
    for v in range(start, start + length):
        edges.append((prev, v))
        prev = v
    return start + length


def path_so(n: int) -> float:
    _need(n >= 3, f"closed form for P_n needs n >= 3, got {n}")
    return 2 * SQRT5 + 2 * SQRT2 * (n - 3)


def path_so_exact(n: int) -> RadicalSum:
    _need(n >= 3, f"closed form for P_n needs n >= 3, got {n}")
    return RadicalSum.sqrt(5, 2) + RadicalSum.sqrt(2, 2 * (n - 3))


def cycle_so(n: int) -> float:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return 2 * n * SQRT2


def cycle_so_exact(n: int) -> RadicalSum:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return RadicalSum.sqrt(2, 2 * n)


# -- star-like trees (minimum SO for a given maximum degree) ------------------

@dataclass(frozen=True)
class StarLikeSpec:
    """A tree with one hub of degree ``delta``: ``pendant_count`` leaves at the hub
    and one pendent path per entry of ``branch_lengths`` (each at least 2 long)."""

    n: int
    delta: int
    pendant_count: int
    branch_lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_lengths", tuple(sorted(self.branch_lengths, reverse=True)))
        n, delta, k, lengths = self.n, self.delta, self.pendant_count, self.branch_lengths
        _need(delta >= 3, f"hub degree must be >= 3, got {delta}")
        _need(0 <= k <= delta, f"pendant count must be in 0..{delta}, got {k}")
        _need(len(lengths) == delta - k, f"need {delta - k} branch lengths, got {len(lengths)}")
        _need(all(L >= 2 for L in lengths), f"branch lengths must be >= 2, got {lengths}")
        _need(k + sum(lengths) == n - 1, f"pendants plus branch lengths must equal n-1={n - 1}")


def star_like_tree(spec: StarLikeSpec) -> Graph:
    edges = [(0, i) for i in range(1, spec.pendant_count + 1)]
    nxt = spec.pendant_count + 1
    for length in spec.branch_lengths:
        nxt = _attach_path(edges, nxt, 0, length)
    return Graph.from_edge_list(spec.n, edges)


def _check_star_like(n: int, delta: int, k: int) -> None:
    _need(delta >= 3, f"hub degree must be >= 3, got {delta}")
    _need(n >= delta + 1, f"need n >= delta+1, got n={n}, delta={delta}")
    _need(0 <= k <= delta, f"pendant count must be in 0..{delta}, got {k}")
    _need(k >= 2 * delta - n + 1,
          f"pendant count {k} is infeasible: need k >= 2*delta-n+1 = {2 * delta - n + 1}")
    if k == delta:
        _need(n == delta + 1, f"k = delta forces n = delta+1, got n={n}")


def star_like_specs(n: int, delta: int, k: int) -> Iterator[StarLikeSpec]:
    """All star-like trees with these parameters, one per multiset of branch lengths."""
    _check_star_like(n, delta, k)

    def partitions(total, parts, largest):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(min(largest, total - 2 * (parts - 1)), 1, -1):
            for rest in partitions(total - first, parts - 1, first):
                yield (first,) + rest

    for lengths in partitions(n - 1 - k, delta - k, n):
        yield StarLikeSpec(n, delta, k, lengths)


def default_star_like_spec(n: int, delta: int, k: int) -> StarLikeSpec:
    """Branches of length 2 with the surplus on the first branch."""
    _check_star_like(n, delta, k)
    branches = delta - k
    if branches == 0:
        return StarLikeSpec(n, delta, k, ())
    lengths = [2] * branches
    lengths[0] += n - 1 - k - 2 * branches
    return StarLikeSpec(n, delta, k, tuple(lengths))


def star_like_so(n: int, delta: int, k: int) -> float:
    _check_star_like(n, delta, k)
    return (k * (theta(2) - theta(delta))
            + delta * (math.sqrt(delta * delta + 4) + SQRT5)
            + 2 * (n - 1 - 2 * delta) * SQRT2)


def star_like_so_exact(n: int, delta: int, k: int) -> RadicalSum:
    _check_star_like(n, delta, k)
    return ((theta_exact(2) - theta_exact(delta)) * k
            + (RadicalSum.sqrt(delta * delta + 4) + RadicalSum.sqrt(5)) * delta
            + RadicalSum.sqrt(2, 2 * (n - 1 - 2 * delta)))


def _check_min_delta(n: int, delta: int) -> None:
    _need(delta >= 3, f"the max-degree bound needs delta >= 3, got {delta}")
    _need(n >= delta + 1, f"need n >= delta+1, got n={n}, delta={delta}")


def min_so_delta_bound(n: int, delta: int) -> float:
    """Least SO of a connected graph of order ``n`` with maximum degree ``delta``."""
    _check_min_delta(n, delta)
    if 2 * delta <= n - 1:
        return delta * (math.sqrt(delta ** 2 + 4) + SQRT5) + 2 * (n - 2 * delta - 1) * SQRT2
    return ((n - 1 - delta) * (math.sqrt(delta ** 2 + 4) + SQRT5)
            + (2 * delta - n + 1) * math.sqrt(delta ** 2 + 1))


def min_so_delta_bound_exact(n: int, delta: int) -> RadicalSum:
    _check_min_delta(n, delta)
    if 2 * delta <= n - 1:
        return ((RadicalSum.sqrt(delta ** 2 + 4) + RadicalSum.sqrt(5)) * delta
                + RadicalSum.sqrt(2, 2 * (n - 2 * delta - 1)))
    return ((RadicalSum.sqrt(delta ** 2 + 4) + RadicalSum.sqrt(5)) * (n - 1 - delta)
            + RadicalSum.sqrt(delta ** 2 + 1, 2 * delta - n + 1))


# -- unicyclic families ---------------------------------------------------------

def lollipop(n: int, g: int) -> Graph:
    """``C_g`` with a single pendent path of length ``n - g >= 2`` at vertex 0."""
    _need(g >= 3, f"lollipop needs girth >= 3, got {g}")
    _need(g <= n - 2, f"lollipop needs a tail of length >= 2 (g <= n-2), got n={n}, g={g}")
    edges = [(i, (i + 1) % g) for i in range(g)]
    _attach_path(edges, g, 0, n - g)
    return Graph.from_edge_list(n, edges)


def lollipop_so(n: int) -> float:
    """SO of any lollipop of order ``n``; independent of the girth."""
    _need(n >= 5, f"lollipops exist only for n >= 5, got {n}")
    return SQRT5 + 3 * math.sqrt(13) + 2 * SQRT2 * (n - 4)


def lollipop_so_exact(n: int) -> RadicalSum:
    _need(n >= 5, f"lollipops exist only for n >= 5, got {n}")
    return RadicalSum.sqrt(5) + RadicalSum.sqrt(13, 3) + RadicalSum.sqrt(2, 2 * (n - 4))


def cycle_with_pendant(n: int) -> Graph:
    """``C_{n-1}`` on vertices ``0..n-2`` plus the pendant ``n-1`` at vertex 0."""
    _need(n >= 4, f"C_(n,1) needs n >= 4, got {n}")
    edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edge_list(n, edges)


def cycle_with_pendant_so(n: int) -> float:
    _need(n >= 4, f"C_(n,1) needs n >= 4, got {n}")
    return 2 * SQRT2 * (n - 3) + 2 * math.sqrt(13) + math.sqrt(10)


def cycle_with_pendant_so_exact(n: int) -> RadicalSum:
    _need(n >= 4, f"C_(n,1) needs n >= 4, got {n}")
    return RadicalSum.sqrt(2, 2 * (n - 3)) + RadicalSum.sqrt(13, 2) + RadicalSum.sqrt(10)


def u_n_g(n: int, g: int) -> Graph:
    """``C_g`` with ``n - g`` pendant edges at vertex 0."""
    _need(3 <= g <= n, f"U(n,g) needs 3 <= g <= n, got n={n}, g={g}")
    edges = [(i, (i + 1) % g) for i in range(g)] + [(0, v) for v in range(g, n)]
    return Graph.from_edge_list(n, edges)


def max_so_unicyclic(n: int, g: int) -> float:
    _need(3 <= g <= n, f"unicyclic bound needs 3 <= g <= n, got n={n}, g={g}")
    hub = n - g + 2
    return 2 * math.sqrt(hub ** 2 + 4) + (n - g) * math.sqrt(hub ** 2 + 1) + 2 * SQRT2 * (g - 2)


def max_so_unicyclic_exact(n: int, g: int) -> RadicalSum:
    _need(3 <= g <= n, f"unicyclic bound needs 3 <= g <= n, got n={n}, g={g}")
    hub = n - g + 2
    return (RadicalSum.sqrt(hub ** 2 + 4, 2) + RadicalSum.sqrt(hub ** 2 + 1, n - g)
            + RadicalSum.sqrt(2, 2 * (g - 2)))


# -- clique with pendants (maximum SO for k pendent vertices / r cut edges) ----

def kite_with_pendants(n: int, k: int) -> Graph:
    """``K_{n-k}`` on ``0..n-k-1`` with ``k`` pendant edges at vertex 0."""
    _need(1 <= k <= n - 3, f"need 1 <= k <= n-3, got n={n}, k={k}")
    c = n - k
    edges = [(i, j) for i in range(c) for j in range(i + 1, c)] + [(0, v) for v in range(c, n)]
    return Graph.from_edge_list(n, edges)


def max_so_pendent(n: int, k: int) -> float:
    """Largest SO of a connected graph of order ``n`` with ``k`` pendent vertices
    (equally, with ``k`` cut edges)."""
    _need(1 <= k <= n - 3, f"need 1 <= k <= n-3, got n={n}, k={k}")
    c1 = n - k - 1
    return ((n - k - 2) * c1 ** 2 / SQRT2 + k * math.sqrt((n - 1) ** 2 + 1)
            + c1 * math.sqrt((n - 1) ** 2 + c1 ** 2))


def max_so_pendent_exact(n: int, k: int) -> RadicalSum:
    _need(1 <= k <= n - 3, f"need 1 <= k <= n-3, got n={n}, k={k}")
    c1 = n - k - 1
    # x / sqrt(2) == (x / 2) * sqrt(2)
    return (RadicalSum.sqrt(2, Fraction((n - k - 2) * c1 ** 2, 2))
            + RadicalSum.sqrt((n - 1) ** 2 + 1, k)
            + RadicalSum.sqrt((n - 1) ** 2 + c1 ** 2, c1))


max_so_cut_edges = max_so_pendent
max_so_cut_edges_exact = max_so_pendent_exact
