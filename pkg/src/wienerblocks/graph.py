"""Simple undirected graphs and their distance invariants.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
unions and edge toggles are single integer operations.  All distances are
exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX = 258047  # largest n with a 4-byte graph6 size prefix
UNREACHABLE = -1


class GraphError(ValueError):
    """Invalid graph construction or malformed encoding."""


class DisconnectedGraphError(GraphError):
    """An invariant that needs a connected graph got a disconnected one."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DistanceVector:
    """Counts of vertices at distance 1, 2, ..., eccentricity from ``root``."""

    root: int
    counts: tuple[int, ...]

    def bracket(self) -> int:
        """Weighted sum ``sum(i * counts[i])`` with 1-based ``i``."""
        return sum(i * c for i, c in enumerate(self.counts, start=1))

    @property
    def eccentricity(self) -> int:
        return len(self.counts)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges are merged."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Wrap bitmask rows, checking symmetry and absence of loops."""
    n = len(adj)
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    full = (1 << n) - 1
    for u, a in enumerate(adj):
        if a & ~full:
            raise GraphError(f"row {u} references vertices beyond {n - 1}")
        if a >> u & 1:
            raise GraphError(f"loop at vertex {u}")
        for v in iter_bits(a):
            if not adj[v] >> u & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(adj))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        adj[i] = row
    return Graph(g.n, tuple(adj))


def _levels(adj: Sequence[int], v: int) -> list[int]:
    """BFS layers from ``v`` as bitmasks; layer 0 is ``{v}``."""
    seen = 1 << v
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def component_mask(adj: Sequence[int], v: int, allowed: int = -1) -> int:
    """Vertices reachable from ``v`` using only vertices in ``allowed``."""
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g.adj, 0) == (1 << g.n) - 1


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Shortest-path lengths from ``v``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    dist = [UNREACHABLE] * g.n
    for d, layer in enumerate(_levels(g.adj, v)):
        for u in iter_bits(layer):
            dist[u] = d
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def distance_vector(g: Graph, v: int) -> DistanceVector:
    _require_connected(g)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    layers = _levels(g.adj, v)
    return DistanceVector(v, tuple(layer.bit_count() for layer in layers[1:]))


def _transmission(adj: Sequence[int], v: int) -> int:
    return sum(d * layer.bit_count() for d, layer in enumerate(_levels(adj, v)))


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to every other vertex."""
    _require_connected(g)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return _transmission(g.adj, v)


def transmissions(g: Graph) -> list[int]:
    _require_connected(g)
    return [_transmission(g.adj, v) for v in range(g.n)]


def wiener(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs, via one BFS per vertex."""
    total = sum(transmissions(g))
    return total // 2


def eccentricity(g: Graph, v: int) -> int:
    _require_connected(g)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return len(_levels(g.adj, v)) - 1


def distance(g: Graph, u: int, v: int) -> int:
    return bfs_distances(g, u)[v]


# graph6 without header; the size prefix is 1 byte for n <= 62, else 4 bytes.


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    if g.n > GRAPH6_MAX:
        raise GraphError(f"graph6 supports at most {GRAPH6_MAX} vertices")
    if g.n <= 62:
        chars = [chr(g.n + 63)]
    else:
        chars = [chr(126)] + [chr((g.n >> s & 63) + 63) for s in (12, 6, 0)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip("\r\n")
    if not s:
        raise GraphError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        raise GraphError("graph6 header is not accepted")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"malformed graph6 character in {s!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise GraphError(f"unsupported graph6 size prefix in {s!r}")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        if n <= 62:
            raise GraphError(f"long size prefix used for n={n}")
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n < 1:
        raise GraphError("graph6 size must be positive")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 string {s!r} has wrong length for n={n}")
    bits = []
    for c in body:
        bits.extend((c >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError(f"nonzero padding in graph6 string {s!r}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
