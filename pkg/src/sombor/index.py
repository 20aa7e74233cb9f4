"""The Sombor index, in floating point and as an exact sum of square roots."""

from __future__ import annotations

import decimal
import functools
import math
from fractions import Fraction
from typing import Mapping, Union

from .errors import RadicalError, SomborError
from .graph import Graph

Rational = Union[int, Fraction]

# relative margin inside which float comparison is not trusted
DECISION_MARGIN = 1e-9


@functools.lru_cache(maxsize=None)
def squarefree_split(value: int) -> tuple[int, int]:
    """Return ``(q, r)`` with ``value == q*q*r`` and ``r`` squarefree."""
    if value < 1:
        raise RadicalError(f"radicand must be a positive integer, got {value}")
    q, r, p = 1, value, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            q *= p
        p += 1
    return q, r


def is_squarefree(value: int) -> bool:
    return value >= 1 and squarefree_split(value)[0] == 1


@functools.total_ordering
class RadicalSum:
    """Finite sum ``sum(c * sqrt(r))`` with squarefree ``r`` and nonzero rational ``c``.

    Square roots of distinct squarefree integers are linearly independent over
    the rationals, so two reduced sums are equal exactly when their term maps
    are. Sombor values always have positive coefficients; differences of
    values (and closed forms containing ``theta``) may carry negative ones.
    """

    __slots__ = ("_items",)

    def __init__(self, terms: Mapping[int, Rational] = None):
        items = []
        for r, c in (terms or {}).items():
            if not isinstance(r, int) or not is_squarefree(r):
                raise RadicalError(f"radicand {r!r} is not a reduced squarefree integer")
            c = Fraction(c)
            if c == 0:
                raise RadicalError(f"zero coefficient at radicand {r}")
            items.append((r, c))
        self._items = tuple(sorted(items))

    @classmethod
    def sqrt(cls, value: int, coeff: Rational = 1) -> "RadicalSum":
        """``coeff * sqrt(value)`` in reduced form."""
        if coeff == 0:
            return cls()
        q, r = squarefree_split(value)
        return cls({r: Fraction(coeff) * q})

    @classmethod
    def _from_accumulator(cls, acc: dict) -> "RadicalSum":
        out = cls.__new__(cls)
        out._items = tuple(sorted((r, c) for r, c in acc.items() if c != 0))
        return out

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._items)

    def is_positive_form(self) -> bool:
        return all(c > 0 for _, c in self._items)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalSum({1: other} if other else {})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        acc = dict(self._items)
        for r, c in other._items:
            acc[r] = acc.get(r, 0) + c
        return RadicalSum._from_accumulator(acc)

    def __neg__(self):
        return RadicalSum._from_accumulator({r: -c for r, c in self._items})

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalSum({1: other} if other else {})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return RadicalSum._from_accumulator({r: c * scalar for r, c in self._items})

    __rmul__ = __mul__

    def __float__(self):
        return math.fsum(float(c) * math.sqrt(r) for r, c in self._items)

    def to_decimal(self, digits: int = 60) -> decimal.Decimal:
        with decimal.localcontext() as ctx:
            ctx.prec = digits + 10
            total = decimal.Decimal(0)
            for r, c in self._items:
                total += decimal.Decimal(c.numerator) / decimal.Decimal(c.denominator) * decimal.Decimal(r).sqrt()
            return +total

    def magnitude(self) -> float:
        return math.fsum(abs(float(c)) * math.sqrt(r) for r, c in self._items)

    def sign(self) -> int:
        """Exact sign of the value.

        Decided in double precision when clear of the decision margin,
        otherwise in decimal arithmetic at increasing precision.
        """
        if not self._items:
            return 0
        x = float(self)
        scale = max(1.0, self.magnitude())
        if abs(x) > DECISION_MARGIN * scale:
            return 1 if x > 0 else -1
        for digits in (60, 120, 240):
            d = self.to_decimal(digits)
            if abs(d) > decimal.Decimal(10) ** (-(digits - 10)) * decimal.Decimal(scale):
                return 1 if d > 0 else -1
        raise RadicalError("could not resolve the sign of a nonzero radical sum")

    def __eq__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other):
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"RadicalSum({dict(self._items)!r})"

    def __str__(self):
        if not self._items:
            return "0"
        parts = []
        for r, c in self._items:
            coeff = "" if c == 1 else ("-" if c == -1 else str(c))
            parts.append(f"{coeff}" if r == 1 else f"{coeff}√{r}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, str]:
        return {str(r): str(c) for r, c in self._items}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "RadicalSum":
        return cls({int(r): Fraction(c) for r, c in data.items()})


def edge_term(du: int, dv: int) -> float:
    if du < 1 or dv < 1:
        raise SomborError(f"degrees must be positive, got ({du}, {dv})")
    return math.sqrt(du * du + dv * dv)


def sombor_index(G: Graph) -> float:
    deg = G.degrees()
    return math.fsum(edge_term(deg[u], deg[v]) for u, v in G.edges())


def sombor_exact(G: Graph) -> RadicalSum:
    deg = G.degrees()
    acc: dict[int, int] = {}
    for u, v in G.edges():
        q, r = squarefree_split(deg[u] ** 2 + deg[v] ** 2)
        acc[r] = acc.get(r, 0) + q
    return RadicalSum(acc)


def so_equal(a: RadicalSum, b: RadicalSum) -> bool:
    return a == b


def theta(t: float) -> float:
    """``sqrt(t^2 + 4) - sqrt(t^2 + 1)``, strictly decreasing on ``t >= 0``."""
    if t < 0:
        raise SomborError(f"theta is defined for t >= 0, got {t}")
    return math.sqrt(t * t + 4) - math.sqrt(t * t + 1)


def theta_exact(t: int) -> RadicalSum:
    return RadicalSum.sqrt(t * t + 4) - RadicalSum.sqrt(t * t + 1)
