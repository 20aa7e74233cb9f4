"""Executable checks of the extremal results: majorization machinery, the
transformation lemmas, and bound-plus-characterization reports built on
exhaustive search.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from . import families as fam
from .canon import canonical_code
from .enumeration import (
    GENERAL_MAX_ORDER,
    SPARSE_MAX_ORDER,
    GraphClassSpec,
    Objective,
    Universe,
    extremal_search,
)
from .errors import CapExceededError, MajorizationError, ParameterError
from .graph import Graph, transform_contract_pendant, transform_path_shift
from .index import RadicalSum, sombor_exact

# -- majorization ----------------------------------------------------------------


@dataclass(frozen=True)
class MajorizationPair:
    """Two non-increasing sequences of equal length and equal sum."""

    a: tuple
    b: tuple

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise MajorizationError(f"lengths differ: {len(a)} vs {len(b)}")
        if any(x < y for x, y in zip(a, a[1:])) or any(x < y for x, y in zip(b, b[1:])):
            raise MajorizationError("both sequences must be non-increasing")
        if sum(a) != sum(b):
            raise MajorizationError(f"sums differ: {sum(a)} vs {sum(b)}")

    @classmethod
    def sorted_from(cls, a, b) -> "MajorizationPair":
        return cls(tuple(sorted(a, reverse=True)), tuple(sorted(b, reverse=True)))


def majorizes(p: MajorizationPair) -> bool:
    """True when every prefix sum of ``p.a`` dominates the matching prefix of ``p.b``."""
    sa = sb = 0
    for x, y in zip(p.a, p.b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def _looks_convex(f: Callable, lo: float, hi: float, samples: int = 64) -> bool:
    if hi <= lo:
        return True
    xs = [lo + (hi - lo) * i / samples for i in range(samples + 1)]
    ys = [float(f(x)) for x in xs]
    return all(ys[i - 1] + ys[i + 1] - 2 * ys[i] >= -1e-12 * max(1.0, abs(ys[i]))
               for i in range(1, samples))


def karamata_check(f: Callable, p: MajorizationPair, exact: bool = False) -> bool:
    """Check ``sum f(a) >= sum f(b)`` for a majorizing pair, equality only if ``a == b``.

    ``f`` must be strictly convex on the range covered by the pair; this is
    sampled as a guard. With ``exact=True`` the values of ``f`` are summed
    without rounding (``f`` must then return ints or Fractions) and strict
    inequality is required whenever the sequences differ.
    """
    if not majorizes(p):
        raise MajorizationError("karamata_check needs a pair where a majorizes b")
    values = p.a + p.b
    if not _looks_convex(f, float(min(values)), float(max(values))):
        raise MajorizationError("f does not look convex on the covered interval")
    if exact:
        sa, sb = sum(f(x) for x in p.a), sum(f(y) for y in p.b)
        return sa == sb if p.a == p.b else sa > sb
    sa = math.fsum(float(f(x)) for x in p.a)
    sb = math.fsum(float(f(y)) for y in p.b)
    tol = 1e-12 * max(1.0, abs(sa))
    if p.a == p.b:
        return abs(sa - sb) <= tol
    return sa > sb - tol


def karamata_gap(f: Callable, p: MajorizationPair) -> float:
    return math.fsum(float(f(x)) for x in p.a) - math.fsum(float(f(y)) for y in p.b)


def random_majorization_pair(rng: random.Random, length: int = 8, top: int = 20,
                             transfers: int = 4) -> MajorizationPair:
    """Integer pair built by Robin Hood transfers, so ``a`` majorizes ``b`` by construction."""
    a = sorted((rng.randint(0, top) for _ in range(length)), reverse=True)
    b = list(a)
    for _ in range(rng.randint(0, transfers)):
        i, j = sorted(rng.sample(range(length), 2))
        b.sort(reverse=True)
        gap = b[i] - b[j]
        if gap <= 0:
            continue
        # moving at most the gap from richer to poorer stays within the convex hull of swaps
        amount = rng.randint(1, gap)
        b[i] -= amount
        b[j] += amount
    return MajorizationPair.sorted_from(a, b)


def unicyclic_majorization_witness(cycle_degrees: Sequence[int], k: int) -> MajorizationPair:
    """Sequences from the unicyclic upper-bound argument.

    ``a``: ``(k+2)/2`` twice, ``1`` repeated ``2g-4`` times, ``2/(k+2)`` repeated
    ``k+2`` times. ``b``: for each cycle position ``i`` the ratio
    ``d[i+1]/d[i]`` (indices mod ``g``) repeated ``d[i]`` times.
    """
    d = list(cycle_degrees)
    g = len(d)
    if g < 3:
        raise MajorizationError(f"cycle needs at least 3 vertices, got {g}")
    if any(not 2 <= x <= k + 2 for x in d) or sum(d) != k + 2 * g:
        raise MajorizationError(f"infeasible cycle degrees {d} for k={k}")
    a = [Fraction(k + 2, 2)] * 2 + [Fraction(1)] * (2 * g - 4) + [Fraction(2, k + 2)] * (k + 2)
    b = []
    for i in range(g):
        b.extend([Fraction(d[(i + 1) % g], d[i])] * d[i])
    return MajorizationPair.sorted_from(a, b)


def _clique_shape(d: Sequence[int]) -> tuple[int, int]:
    c = len(d)
    k = sum(d) - c * (c - 1)
    return c, k


def pendant_shift_index(clique_degrees: Sequence[int]) -> int:
    """0-based position of the smallest degree strictly between ``c-1`` and ``n-1``.

    Ties go to the last such position so the receiving vertex (position 0)
    is never chosen.
    """
    d = list(clique_degrees)
    c, k = _clique_shape(d)
    n = c + k
    candidates = [i for i in range(1, c) if c - 1 < d[i] < n - 1]
    if not candidates:
        raise MajorizationError(f"degrees {d} leave no vertex to shift a pendant from")
    low = min(d[i] for i in candidates)
    return max(i for i in candidates if d[i] == low)


def pendant_shift_majorization_witness(clique_degrees: Sequence[int],
                                       t: Optional[int] = None) -> MajorizationPair:
    """Sequences from the pendant-vertex upper-bound argument.

    ``clique_degrees`` are the degrees ``d_1 >= ... >= d_c`` of the clique
    vertices in a clique-with-pendants graph, ``t`` a 0-based index (default:
    :func:`pendant_shift_index`). For every other position ``i`` the pair
    holds ``(d_1+1)/d_i`` and ``(d_t-1)/d_i`` against ``d_1/d_i`` and
    ``d_t/d_i``, each repeated ``d_i`` times.
    """
    d = list(clique_degrees)
    if any(x < y for x, y in zip(d, d[1:])):
        raise MajorizationError("clique degrees must be non-increasing")
    c, k = _clique_shape(d)
    n = c + k
    if c < 3 or k < 1 or any(not c - 1 <= x < n - 1 for x in d):
        raise MajorizationError(f"degrees {d} violate c-1 <= d_i < n-1 with n={n}, k={k}")
    if t is None:
        t = pendant_shift_index(d)
    elif not (1 <= t < c and c - 1 < d[t] < n - 1):
        raise MajorizationError(f"index {t} does not select a shiftable vertex")
    a, b = [], []
    for i in range(c):
        if i in (0, t):
            continue
        a += [Fraction(d[0] + 1, d[i])] * d[i] + [Fraction(d[t] - 1, d[i])] * d[i]
        b += [Fraction(d[0], d[i])] * d[i] + [Fraction(d[t], d[i])] * d[i]
    return MajorizationPair.sorted_from(a, b)


def cycle_degree_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Cycle-degree sequences of unicyclic graphs of order ``n`` whose pendants sit on the cycle."""
    for g in range(3, n + 1):
        k = n - g
        for cuts in _compositions(k, g):
            yield tuple(2 + x for x in cuts)


def clique_degree_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Non-extremal clique-with-pendants degree sequences (clique order >= 3, k >= 1)."""
    for k in range(1, n - 2):
        c = n - k
        for parts in _partitions(k, c):
            if parts[0] == k:
                continue  # every pendant on one vertex: already the extremal graph
            yield tuple(c - 1 + p for p in parts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _partitions(total: int, parts: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` non-negative ints summing to ``total``."""
    largest = total if largest is None else largest
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def phi_inequality_check(x: float, y: float, a: float) -> bool:
    if not (x >= y >= 0 and a >= 1):
        raise ParameterError(f"need x >= y >= 0 and a >= 1, got x={x}, y={y}, a={a}")
    lhs = (x + 1) * math.sqrt((x + a) ** 2 + 1) + y * math.sqrt((y + a - 1) ** 2 + 1)
    rhs = x * math.sqrt((x + a - 1) ** 2 + 1) + (y + 1) * math.sqrt((y + a) ** 2 + 1)
    return lhs - rhs >= -1e-12


# -- transformation lemmas ------------------------------------------------------------


def path_shift_margins(G: Graph) -> Iterator[tuple]:
    """``(P, Q, SO(G) - SO(G'))`` for every ordered pair of distinct pendent paths."""
    base = sombor_exact(G)
    paths = G.pendent_paths()
    for P in paths:
        for Q in paths:
            if P != Q:
                yield P, Q, base - sombor_exact(transform_path_shift(G, P, Q))


def lemma_pendent_path_suite(G: Graph) -> bool:
    return all(diff.sign() > 0 for _, _, diff in path_shift_margins(G))


def contraction_margins(G: Graph) -> Iterator[tuple]:
    """``((u, v), SO(G') - SO(G))`` for each non-pendent cut edge, in both orientations."""
    base = sombor_exact(G)
    deg = G.degrees()
    for u, v in sorted(G.bridges()):
        if deg[u] >= 2 and deg[v] >= 2:
            for e in ((u, v), (v, u)):
                yield e, sombor_exact(transform_contract_pendant(G, e)) - base


def lemma_contraction_suite(G: Graph) -> bool:
    return all(diff.sign() > 0 for _, diff in contraction_margins(G))


# -- theorem reports ---------------------------------------------------------------------

THEOREM_IDS = ("min-delta", "girth-min", "unicyclic-min", "unicyclic-max", "pendent-max", "cutedge-max")


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    bound_value: RadicalSum
    search_value: RadicalSum
    bound_matches: bool
    characterization_holds: bool
    witnesses: list[str]
    predicted: list[str] = field(default_factory=list)
    class_size: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.bound_matches and self.characterization_holds

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "bound_float": float(self.bound_value),
            "bound_radical_terms": self.bound_value.to_json(),
            "optimum_float": float(self.search_value),
            "optimum_radical_terms": self.search_value.to_json(),
            "bound_matches": self.bound_matches,
            "characterization_holds": self.characterization_holds,
            "witnesses_graph6": self.witnesses,
            "predicted_graph6": self.predicted,
            "class_size": self.class_size,
            "seconds": round(self.elapsed, 6),
        }

    def params_text(self) -> str:
        return " ".join(f"{k}={'any' if v is None else v}" for k, v in self.params.items())

    CSV_HEADER = ("theorem", "params", "bound", "optimum", "match", "witness_count", "seconds")

    def csv_row(self) -> list:
        return [self.theorem, self.params_text(), f"{float(self.bound_value):.12g}",
                f"{float(self.search_value):.12g}", str(self.passed).lower(),
                len(self.witnesses), f"{self.elapsed:.3f}"]


@dataclass
class _Plan:
    spec: GraphClassSpec
    objective: Objective
    universe: Universe
    bound: RadicalSum
    predicted: list[Graph]
    where: Optional[Callable[[Graph], bool]] = None


def _not_cycle(G: Graph) -> bool:
    return not (G.is_unicyclic() and G.max_degree() == 2)


def _plan(theorem: str, params: dict) -> _Plan:
    n = params["n"]
    if theorem == "min-delta":
        delta = params["delta"]
        if not 3 <= delta <= n - 1:
            raise ParameterError(f"min-delta needs 3 <= delta <= n-1, got n={n}, delta={delta}")
        k = max(0, 2 * delta - n + 1)
        return _Plan(GraphClassSpec(n, max_degree=delta), Objective.MIN, Universe.GENERAL,
                     fam.min_so_delta_bound_exact(n, delta),
                     [fam.star_like_tree(s) for s in fam.star_like_specs(n, delta, k)])
    if theorem == "girth-min":
        universe = Universe(params.get("universe", "unicyclic"))
        g = params.get("g")
        if g is None:
            # pooled reading: every unicyclic graph of order n other than C_n
            if n < 5:
                raise ParameterError(f"pooled girth-min needs n >= 5, got {n}")
            return _Plan(GraphClassSpec(n, unicyclic=True), Objective.MIN, Universe.UNICYCLIC,
                         fam.lollipop_so_exact(n),
                         [fam.lollipop(n, gg) for gg in range(3, n - 1)], where=_not_cycle)
        if not 3 <= g <= n:
            raise ParameterError(f"girth-min needs 3 <= g <= n, got n={n}, g={g}")
        spec = GraphClassSpec(n, girth=g, unicyclic=True if universe is Universe.UNICYCLIC else None)
        if g == n:
            bound, predicted = fam.cycle_so_exact(n), [fam.cycle(n)]
        elif g == n - 1:
            bound, predicted = fam.cycle_with_pendant_so_exact(n), [fam.cycle_with_pendant(n)]
        else:
            bound, predicted = fam.lollipop_so_exact(n), [fam.lollipop(n, g)]
        return _Plan(spec, Objective.MIN, universe, bound, predicted)
    if theorem == "unicyclic-min":
        if n < 3:
            raise ParameterError(f"unicyclic-min needs n >= 3, got {n}")
        return _Plan(GraphClassSpec(n, unicyclic=True), Objective.MIN, Universe.UNICYCLIC,
                     fam.cycle_so_exact(n), [fam.cycle(n)])
    if theorem == "unicyclic-max":
        g = params["g"]
        return _Plan(GraphClassSpec(n, girth=g, unicyclic=True), Objective.MAX, Universe.UNICYCLIC,
                     fam.max_so_unicyclic_exact(n, g), [fam.u_n_g(n, g)])
    if theorem in ("pendent-max", "cutedge-max"):
        k = params["k"]
        if theorem == "pendent-max":
            spec = GraphClassSpec(n, pendent_count=k)
        else:
            spec = GraphClassSpec(n, cut_edge_count=k)
        return _Plan(spec, Objective.MAX, Universe.GENERAL,
                     fam.max_so_pendent_exact(n, k), [fam.kite_with_pendants(n, k)])
    raise ParameterError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")


def check_caps(theorem: str, n: int, universe: Optional[str] = None) -> None:
    """Refuse parameters beyond the enumeration caps before any work starts."""
    if theorem not in THEOREM_IDS:
        raise ParameterError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREM_IDS)}")
    general = theorem in ("min-delta", "pendent-max", "cutedge-max") or universe == "general"
    cap = GENERAL_MAX_ORDER if general else SPARSE_MAX_ORDER
    if n > cap:
        raise CapExceededError(f"{theorem} is capped at n <= {cap}, got n={n}")


def verify_theorem(theorem: str, workers: int = 1, **params) -> TheoremReport:
    """Compare the closed-form bound and predicted extremal graphs with exhaustive search."""
    check_caps(theorem, params["n"], params.get("universe"))
    start = time.perf_counter()
    plan = _plan(theorem, params)
    result = extremal_search(plan.spec, plan.objective, plan.universe, workers=workers, where=plan.where)
    predicted_codes = sorted(canonical_code(G) for G in plan.predicted)
    return TheoremReport(
        theorem=theorem,
        params=dict(params),
        bound_value=plan.bound,
        search_value=result.optimum,
        bound_matches=plan.bound == result.optimum,
        characterization_holds=sorted(result.witness_codes) == predicted_codes,
        witnesses=[c.decode("ascii") for c in result.witness_codes],
        predicted=[c.decode("ascii") for c in predicted_codes],
        class_size=result.class_size,
        elapsed=time.perf_counter() - start,
    )


def parameter_grid(theorem: str, n: int, second: Optional[Sequence[int]] = None) -> list[dict]:
    """Every valid parameter tuple for order ``n``, optionally restricted to ``second``."""
    def keep(values):
        return [v for v in values if second is None or v in second]

    if theorem == "min-delta":
        return [{"n": n, "delta": d} for d in keep(range(3, n))]
    if theorem == "girth-min":
        return [{"n": n, "g": g} for g in keep(range(3, n + 1))]
    if theorem == "unicyclic-min":
        return [{"n": n}] if n >= 3 else []
    if theorem == "unicyclic-max":
        return [{"n": n, "g": g} for g in keep(range(3, n + 1))]
    if theorem in ("pendent-max", "cutedge-max"):
        return [{"n": n, "k": k} for k in keep(range(1, n - 2))]
    raise ParameterError(f"unknown theorem {theorem!r}")


def proposition_cut_edges_check(n: int, k: int, workers: int = 1) -> bool:
    """Every maximizer with exactly ``k`` cut edges has only pendent cut edges."""
    if n > GENERAL_MAX_ORDER:
        raise CapExceededError(f"cut-edge proposition is capped at n <= {GENERAL_MAX_ORDER}")
    result = extremal_search(GraphClassSpec(n, cut_edge_count=k), Objective.MAX, Universe.GENERAL, workers)
    for G in result.witnesses:
        deg = G.degrees()
        if any(deg[u] >= 2 and deg[v] >= 2 for u, v in G.bridges()):
            return False
    return True


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TheoremReport.CSV_HEADER)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
