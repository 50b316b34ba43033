"""Gluing graphs at a single shared vertex, and the Wiener index of the result.

The Wiener index of a glued graph is assembled from per-part quantities
(part Wiener index, transmission of the attachment vertices, and the
entry-to-exit distance inside each part) without building the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bfs_distances,
    is_connected,
    iter_bits,
    transmission,
    wiener,
)


@dataclass(frozen=True)
class Part:
    """One link of a chain.  ``entry`` is glued to the previous part's ``exit``."""

    graph: Graph
    entry: Optional[int] = None
    exit: Optional[int] = None


@dataclass(frozen=True)
class CompositeSpec:
    parts: tuple[Part, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        validate(self)


def chain(*parts: tuple) -> CompositeSpec:
    """Shorthand: ``chain((g0, None, x0), (g1, e1, x1), ..., (gl, el, None))``."""
    return CompositeSpec([Part(*p) for p in parts])


def validate(spec: CompositeSpec) -> None:
    if not spec.parts:
        raise GraphError("composite needs at least one part")
    last = len(spec.parts) - 1
    for i, part in enumerate(spec.parts):
        g = part.graph
        if not is_connected(g):
            raise DisconnectedGraphError(f"part {i} is disconnected")
        if i > 0 and part.entry is None:
            raise GraphError(f"part {i} has no entry vertex")
        if i < last and part.exit is None:
            raise GraphError(f"part {i} has no exit vertex")
        for v in (part.entry, part.exit):
            if v is not None and not 0 <= v < g.n:
                raise GraphError(f"attachment {v} out of range in part {i}")


def amalgam(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify ``v2`` of ``g2`` with ``v1`` of ``g1``.

    ``g1`` keeps its labels; the other vertices of ``g2`` follow in order.
    """
    for g, v in ((g1, v1), (g2, v2)):
        if not is_connected(g):
            raise DisconnectedGraphError("amalgam of a disconnected part")
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    mapping = _shift_map(g1.n, g2.n, v1, v2)
    n = g1.n + g2.n - 1
    adj = list(g1.adj) + [0] * (g2.n - 1)
    for x in range(g2.n):
        row = 0
        for y in iter_bits(g2.adj[x]):
            row |= 1 << mapping[y]
        adj[mapping[x]] |= row
    return Graph(n, tuple(adj))


def _shift_map(n1: int, n2: int, v1: int, v2: int) -> list[int]:
    return [v1 if x == v2 else n1 + (x if x < v2 else x - 1) for x in range(n2)]


def wiener_pair(g1: Graph, v1: int, g2: Graph, v2: int) -> int:
    """Wiener index of ``amalgam(g1, v1, g2, v2)`` without building it."""
    for g, v in ((g1, v1), (g2, v2)):
        if not is_connected(g):
            raise DisconnectedGraphError("amalgam of a disconnected part")
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    return (
        wiener(g1)
        + wiener(g2)
        + transmission(g1, v1) * (g2.n - 1)
        + transmission(g2, v2) * (g1.n - 1)
    )


def wiener_chain(spec: CompositeSpec) -> int:
    """Wiener index of a chain of parts from per-part data only."""
    parts = spec.parts
    sizes = [p.graph.n for p in parts]
    total = sum(wiener(p.graph) for p in parts)
    # distance from the entry to the exit of each inner part
    through = [0] * len(parts)
    for i, p in enumerate(parts):
        if p.entry is not None and p.exit is not None:
            through[i] = bfs_distances(p.graph, p.entry)[p.exit]
    w_exit = [transmission(p.graph, p.exit) if p.exit is not None else 0 for p in parts]
    w_entry = [transmission(p.graph, p.entry) if p.entry is not None else 0 for p in parts]
    for i in range(len(parts)):
        gap = 0
        for j in range(i + 1, len(parts)):
            if j > i + 1:
                gap += through[j - 1]
            total += (
                w_exit[i] * (sizes[j] - 1)
                + w_entry[j] * (sizes[i] - 1)
                + gap * (sizes[i] - 1) * (sizes[j] - 1)
            )
    return total


def materialize(spec: CompositeSpec) -> Graph:
    """Build the chain by successive amalgamation."""
    parts = spec.parts
    g = parts[0].graph
    exit_vertex = parts[0].exit
    for part in parts[1:]:
        mapping = _shift_map(g.n, part.graph.n, exit_vertex, part.entry)
        g = amalgam(g, exit_vertex, part.graph, part.entry)
        exit_vertex = mapping[part.exit] if part.exit is not None else None
    return g
