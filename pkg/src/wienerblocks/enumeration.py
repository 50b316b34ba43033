"""Isomorph-free generation of connected graphs by canonical vertex augmentation.

A graph on n vertices is produced from every connected graph on n-1
vertices by adding a vertex ``v`` joined to a nonempty subset ``S``.  The
child is kept only if ``v`` lies in the canonically chosen orbit of
non-cut vertices: maximum degree first, then maximum sorted neighbour
degrees, then minimum rooted canonical code.  Removing that orbit gives a
connected graph, so every class has exactly one accepted construction path.
Isomorphic siblings can only arise from a parent with a nontrivial
automorphism; those are deduplicated by the rooted code of ``v``.
"""

from __future__ import annotations

import multiprocessing
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_label, rooted_code
from .graph import Graph, GraphError, component_mask, iter_bits

MAX_ENUM_N = 10


def _components_without(adj: tuple[int, ...], u: int) -> list[int]:
    n = len(adj)
    rest = ((1 << n) - 1) & ~(1 << u)
    comps = []
    while rest:
        low = rest & -rest
        comp = component_mask(adj, low.bit_length() - 1, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def _children(parent: Graph, biconnected: bool = False) -> list[tuple[int, ...]]:
    """Accepted children of ``parent`` as adjacency tuples."""
    adj = parent.adj
    n = parent.n
    vbit = 1 << n
    deg = [a.bit_count() for a in adj]
    comps = [_components_without(adj, u) for u in range(n)]
    # gt[d]: parent vertices of degree > d; eq[d]: of degree == d
    gt = [0] * (n + 2)
    eq = [0] * (n + 2)
    for u in range(n):
        eq[deg[u]] |= 1 << u
    for d in range(n, -1, -1):
        gt[d] = gt[d + 1] | eq[d + 1]
    symmetric = canonical_label(parent).symmetric if n > 1 else False
    seen: set[int] = set()
    out = []

    def noncut(u: int, s: int) -> bool:
        if n == 1:
            return True
        for c in comps[u]:
            if not c & s:
                return False
        return bool(s & ~(1 << u))

    for s in range(1, vbit):
        if biconnected:
            if n < 2:
                continue
            if not all(noncut(u, s) for u in range(n)):
                continue
        d = s.bit_count()
        higher = gt[d] | (eq[d] & s)
        if biconnected:
            if higher:
                continue
        else:
            rejected = False
            h = higher
            while h:
                low = h & -h
                if noncut(low.bit_length() - 1, s):
                    rejected = True
                    break
                h ^= low
            if rejected:
                continue
        tie_mask = (eq[d] & ~s) | (eq[d - 1] & s)
        ties = [u for u in iter_bits(tie_mask) if biconnected or noncut(u, s)]
        child = tuple(a | vbit if s >> u & 1 else a for u, a in enumerate(adj)) + (s,)
        code_v = None
        if ties:
            cdeg = [deg[u] + (s >> u & 1) for u in range(n)] + [d]

            def nbr_key(x: int) -> tuple[int, ...]:
                return tuple(sorted(cdeg[y] for y in iter_bits(child[x])))

            key_v = nbr_key(n)
            rivals = []
            rejected = False
            for u in ties:
                k = nbr_key(u)
                if k > key_v:
                    rejected = True
                    break
                if k == key_v:
                    rivals.append(u)
            if rejected:
                continue
            if rivals:
                code_v = rooted_code(child, n)
                if any(rooted_code(child, u) < code_v for u in rivals):
                    continue
        if symmetric:
            if code_v is None:
                code_v = rooted_code(child, n)
            if code_v in seen:
                continue
            seen.add(code_v)
        out.append(child)
    return out


def _expand_chunk(args: tuple[list[tuple[int, ...]], bool]) -> list[tuple[int, ...]]:
    parents, biconnected = args
    out = []
    for adj in parents:
        out.extend(_children(Graph(len(adj), adj), biconnected))
    return out


def _expand(parents: list[Graph], biconnected: bool, jobs: int) -> list[Graph]:
    if jobs <= 1 or len(parents) < 2 * jobs:
        rows = _expand_chunk(([p.adj for p in parents], biconnected))
    else:
        # contiguous chunks keep the merged output in parent order
        size = -(-len(parents) // (4 * jobs))
        chunks = [
            ([p.adj for p in parents[i:i + size]], biconnected)
            for i in range(0, len(parents), size)
        ]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_expand_chunk, chunks)
        rows = [r for part in parts for r in part]
    return [Graph(len(r), r) for r in rows]


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")


@lru_cache(maxsize=None)
def _connected(n: int, jobs: int = 1) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    return tuple(_expand(list(_connected(n - 1, jobs)), False, jobs))


@lru_cache(maxsize=None)
def _biconnected(n: int, jobs: int = 1) -> tuple[Graph, ...]:
    if n <= 2:
        return tuple(g for g in _connected(n, jobs) if n == 1 or g.edge_count == 1)
    return tuple(_expand(list(_connected(n - 1, jobs)), True, jobs))


def enumerate_connected(n: int, jobs: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices.

    The order is deterministic and independent of ``jobs``.
    """
    _check_n(n)
    return iter(_connected(n, max(1, jobs)))


def enumerate_biconnected(n: int, jobs: int = 1) -> Iterator[Graph]:
    """Nonseparable graphs (2-connected, or K_2 for n = 2; K_1 for n = 1)."""
    _check_n(n)
    return iter(_biconnected(n, max(1, jobs)))


def count_connected(ns: Iterable[int]) -> dict[int, int]:
    return {n: len(_connected(n)) for n in ns}
