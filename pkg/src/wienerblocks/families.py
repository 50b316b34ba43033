"""Named graph families and closed-form distance values for cycles and paths."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .compose import CompositeSpec, Part, materialize, wiener_chain
from .graph import Graph, GraphError, make_graph


def cycle(n: int) -> Graph:
    """Cycle on ``n`` vertices in circular order; ``cycle(2)`` is a single edge."""
    if n == 2:
        return make_graph(2, [(0, 1)])
    if n < 3:
        raise GraphError(f"cycle needs n >= 2, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def spider(k: int, t: int) -> Graph:
    """``k`` paths of length ``t`` sharing the centre vertex 0; ``t*k + 1`` vertices.

    Leg ``i`` occupies vertices ``1 + i*t .. (i+1)*t`` with its tip last.
    """
    if k < 3 or t < 1:
        raise GraphError(f"spider needs k >= 3 and t >= 1, got k={k}, t={t}")
    edges = []
    for i in range(k):
        prev = 0
        for j in range(t):
            v = 1 + i * t + j
            edges.append((prev, v))
            prev = v
    return make_graph(k * t + 1, edges)


def spider_tips(k: int, t: int) -> list[int]:
    return [(i + 1) * t for i in range(k)]


def theta(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by internally disjoint paths of lengths ``a <= b <= c``."""
    a, b, c = sorted((a, b, c))
    if a < 1 or b < 2:
        raise GraphError(f"theta({a},{b},{c}) is not a simple graph")
    n = a + b + c - 1
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return make_graph(n, edges)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of C_a - P_{p-1} - C_b; stored with ``a <= b``."""

    a: int
    b: int
    p: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2 or self.p < 2:
            raise GraphError(f"invalid family parameters a={self.a}, b={self.b}, p={self.p}")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a + self.b + self.p - 3


def two_cycles_spec(params: FamilyParams) -> CompositeSpec:
    """The chain cycle(a) - path(p-1) - cycle(b), glued at the path ends."""
    a, b, p = params.a, params.b, params.p
    return CompositeSpec(
        [
            Part(cycle(a), None, a - 1),
            Part(path(p - 1), 0, p - 2),
            Part(cycle(b), 0, None),
        ]
    )


def two_cycles_path(params: FamilyParams) -> Graph:
    """Cycle-A on ``0..a-1``, then the path, then cycle-B, labelled contiguously."""
    return materialize(two_cycles_spec(params))


def two_cycles_wiener(params: FamilyParams) -> int:
    return wiener_chain(two_cycles_spec(params))


# closed forms


@dataclass(frozen=True)
class TwoNVector:
    n: int
    entries: tuple[int, ...]

    def bracket(self) -> int:
        return sum(i * x for i, x in enumerate(self.entries, start=1))


def two_n(n: int) -> TwoNVector:
    """Distance vector of any vertex of an ``n``-cycle."""
    if n < 2:
        raise GraphError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        entries = (2,) * (n // 2 - 1) + (1,)
    else:
        entries = (2,) * ((n - 1) // 2)
    return TwoNVector(n, entries)


def closed_wiener_cycle(n: int) -> Fraction:
    if n < 2:
        raise GraphError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        return Fraction(n**3, 8)
    return Fraction(n**3 - n, 8)


def closed_transmission_cycle(n: int) -> Fraction:
    if n < 2:
        raise GraphError(f"n must be >= 2, got {n}")
    if n % 2 == 0:
        return Fraction(n**2, 4)
    return Fraction(n**2 - 1, 4)


def closed_wiener_path(n: int) -> int:
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    return comb(n + 1, 3)


def closed_transmission_path_end(n: int) -> int:
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    return comb(n, 2)
