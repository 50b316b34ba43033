"""Canonical labelling of small graphs by partition refinement and search.

The canonical code is the minimum adjacency code over the leaves of an
individualisation-refinement tree.  The tree is isomorphism invariant, so
the minimum is a complete invariant.  Branches are skipped only when they
are images of explored branches under a known automorphism (twin
transpositions, or automorphisms found at equal leaves acting on the first
level), which leaves the minimum unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, graph6_encode, relabel


@dataclass(frozen=True)
class CanonResult:
    code: int
    order: tuple[int, ...]  # canonical vertex i is order[i]
    symmetric: bool  # a nontrivial (colour-preserving) automorphism exists


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple([(a & m).bit_count() for m in masks])
                grp = groups.get(key)
                if grp is None:
                    groups[key] = [v]
                else:
                    grp.append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not split:
            return out
        cells = out


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for j in range(1, len(order)):
        a = adj[order[j]]
        col = 0
        while a:
            low = a & -a
            i = pos[low.bit_length() - 1]
            if i < j:
                col |= 1 << i
            a ^= low
        code = (code << j) | col
    return code


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.best_code: Optional[int] = None
        self.best_order: tuple[int, ...] = ()
        self.symmetric = False
        self.parent = list(range(self.n))  # first-level orbits

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def twins(self, u: int, v: int) -> bool:
        bu, bv = 1 << u, 1 << v
        return self.adj[u] & ~bv == self.adj[v] & ~bu

    def leaf(self, order: tuple[int, ...]) -> None:
        code = _leaf_code(self.adj, order)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            self.symmetric = True
            for x, y in zip(self.best_order, order):
                rx, ry = self.find(x), self.find(y)
                if rx != ry:
                    self.parent[max(rx, ry)] = min(rx, ry)

    def run(self, cells: list[list[int]], depth: int) -> None:
        target = -1
        size = self.n + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = i, len(cell)
        if target < 0:
            self.leaf(tuple(cell[0] for cell in cells))
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(self.twins(u, v) for u in tried):
                self.symmetric = True
                continue
            if depth == 0 and any(self.find(u) == self.find(v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            new = cells[:target] + [[v], rest] + cells[target + 1:]
            self.run(_refine(self.adj, new), depth + 1)


def canonical_label(g: Graph, colors: Optional[Sequence[int]] = None) -> CanonResult:
    """Canonical order of ``g``; ``colors`` gives an optional vertex colouring.

    Codes are comparable between graphs with the same vertex count and the
    same colour-class sizes.
    """
    return _canon(g.adj, colors)


def _canon(adj: Sequence[int], colors: Optional[Sequence[int]] = None) -> CanonResult:
    n = len(adj)
    if colors is None:
        cells = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    search = _Search(adj)
    search.run(_refine(adj, cells), 0)
    return CanonResult(search.best_code, search.best_order, search.symmetric)


def rooted_code(adj: Sequence[int], root: int) -> int:
    """Canonical code of the graph with ``root`` individualised."""
    n = len(adj)
    cells = [[root], [v for v in range(n) if v != root]] if n > 1 else [[root]]
    search = _Search(adj)
    search.run(_refine(adj, cells), 0)
    return search.best_code


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_label(g).order)


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_graph(g))


def canonical_key(g: Graph) -> tuple[int, int]:
    return (g.n, canonical_label(g).code)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_label(g).code == canonical_label(h).code
