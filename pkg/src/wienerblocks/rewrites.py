"""Block rewrites that never decrease the Wiener index, and a steepest-ascent driver.

Each move returns the rewritten graph together with the exact change in
the Wiener index.  The change is computed from the composition formulas
(per-part Wiener indices, transmissions and attachment distances), not by
recomputing all distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blocks import Block, BlockDecomposition, block_decomposition
from .canon import canonical_label
from .compose import amalgam
from .families import cycle
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bfs_distances,
    component_mask,
    is_connected,
    transmission,
    wiener,
)


class RewriteError(GraphError):
    """A rewrite was asked for on a block that does not meet its precondition."""


@dataclass(frozen=True)
class RewriteResult:
    before: Graph
    after: Graph
    delta_w: int
    rule: str
    strict: bool  # the move is guaranteed to increase W on this input


# helpers


def _sub(g: Graph, vertices, edges) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``vertices`` with ``edges``, relabelled in increasing order."""
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return Graph(len(order), tuple(adj)), index


def _block_graph(g: Graph, block: Block) -> tuple[Graph, dict[int, int]]:
    return _sub(g, block.vertices, block.edges)


def _hanging_mask(g: Graph, block: Block, x: int) -> int:
    """Vertices reachable from ``x`` without entering the rest of ``block``."""
    others = 0
    for v in block.vertices:
        if v != x:
            others |= 1 << v
    return component_mask(g.adj, x, ~others)


def _replace_edges(g: Graph, old: frozenset, new: list[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in old:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    for u, v in new:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def _cycle_edges(order: list[int]) -> list[tuple[int, int]]:
    if len(order) == 2:
        return [(order[0], order[1])]
    return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]


def _block_distance(g: Graph, block: Block, x: int, y: int) -> int:
    bg, index = _block_graph(g, block)
    return bfs_distances(bg, index[x])[index[y]]


def antipode(g: Graph, block: Block, v: int) -> int:
    """Vertex of a cycle (or edge) block opposite to ``v``; smaller label on ties."""
    bg, index = _block_graph(g, block)
    dist = bfs_distances(bg, index[v])
    far = max(dist)
    inv = sorted(block.vertices)
    return min(inv[i] for i, d in enumerate(dist) if d == far)


def _block_index(dec: BlockDecomposition, block: int) -> Block:
    if not 0 <= block < dec.block_count:
        raise RewriteError(f"block id {block} out of range")
    return dec.blocks[block]


def _is_cycle_block(b: Block) -> bool:
    return b.is_cycle()


# moves


def cyclize_terminal(g: Graph, block: int, dec: Optional[BlockDecomposition] = None) -> RewriteResult:
    """Replace a terminal block by a cycle through the same vertices."""
    dec = dec or block_decomposition(g)
    b = _block_index(dec, block)
    att = dec.attachments(block)
    if len(att) != 1:
        raise RewriteError("block is not terminal")
    if b.size < 3:
        raise RewriteError("terminal block has fewer than 3 vertices")
    if _is_cycle_block(b):
        return RewriteResult(g, g, 0, "cyclize_terminal", False)
    v = att[0]
    order = [v] + sorted(b.vertices - {v})
    after = _replace_edges(g, b.edges, _cycle_edges(order))
    bg, index = _block_graph(g, b)
    c = cycle(b.size)
    n_rest = g.n - b.size + 1
    delta = (wiener(c) - wiener(bg)) + (transmission(c, 0) - transmission(bg, index[v])) * (n_rest - 1)
    return RewriteResult(g, after, delta, "cyclize_terminal", True)


def cyclize_traversal(g: Graph, block: int, dec: Optional[BlockDecomposition] = None) -> RewriteResult:
    """Replace a traversal block by a cycle with its two attachments opposite."""
    dec = dec or block_decomposition(g)
    b = _block_index(dec, block)
    att = dec.attachments(block)
    if len(att) != 2:
        raise RewriteError("block is not traversal")
    if b.size < 3:
        raise RewriteError("traversal block has fewer than 3 vertices")
    v1, v2 = att
    bg, index = _block_graph(g, b)
    d_before = bfs_distances(bg, index[v1])[index[v2]]
    half = b.size // 2
    if _is_cycle_block(b) and d_before == half:
        return RewriteResult(g, g, 0, "cyclize_traversal", False)
    rest = sorted(b.vertices - {v1, v2})
    order = [v1] + rest[: half - 1] + [v2] + rest[half - 1:]
    after = _replace_edges(g, b.edges, _cycle_edges(order))
    c = cycle(b.size)
    n1 = _hanging_mask(g, b, v1).bit_count()
    n2 = _hanging_mask(g, b, v2).bit_count()
    w_c = transmission(c, 0)
    delta = (
        (wiener(c) - wiener(bg))
        + (w_c - transmission(bg, index[v1])) * (n1 - 1)
        + (w_c - transmission(bg, index[v2])) * (n2 - 1)
        + (half - d_before) * (n1 - 1) * (n2 - 1)
    )
    return RewriteResult(g, after, delta, "cyclize_traversal", True)


def _move_block(g: Graph, b: Block, old: int, new: int) -> Graph:
    moved = [(new if x == old else x, new if y == old else y) for x, y in b.edges]
    return _replace_edges(g, b.edges, moved)


def reattach_terminal_pair(
    g: Graph, b1: int, b2: int, dec: Optional[BlockDecomposition] = None
) -> tuple[RewriteResult, RewriteResult]:
    """Move terminal cycle ``b1`` onto the antipode of ``b2``'s attachment, and vice versa.

    Returns ``(G', G'')`` where ``G'`` has ``b1`` moved and ``G''`` has ``b2`` moved.
    """
    dec = dec or block_decomposition(g)
    if dec.block_count < 3:
        raise RewriteError("reattachment needs at least 3 blocks")
    if b1 == b2:
        raise RewriteError("reattachment needs two distinct blocks")
    B1, B2 = _block_index(dec, b1), _block_index(dec, b2)
    a1, a2 = dec.attachments(b1), dec.attachments(b2)
    if len(a1) != 1 or len(a2) != 1:
        raise RewriteError("both blocks must be terminal")
    if not (_is_cycle_block(B1) and _is_cycle_block(B2)):
        raise RewriteError("both blocks must be cycles or single edges")
    v1, v2 = a1[0], a2[0]
    u1, u2 = antipode(g, B1, v1), antipode(g, B2, v2)
    g1, i1 = _block_graph(g, B1)
    g2, i2 = _block_graph(g, B2)
    n1, n2 = B1.size, B2.size
    # G_0: everything except the interiors of the two terminal blocks
    keep = ((1 << g.n) - 1) & ~sum(1 << x for x in (B1.vertices | B2.vertices) - {v1, v2})
    rest_edges = [(x, y) for x, y in g.edges() if keep >> x & 1 and keep >> y & 1
                  and (x, y) not in B1.edges and (x, y) not in B2.edges]
    g0, i0 = _sub(g, [x for x in range(g.n) if keep >> x & 1], rest_edges)
    n0 = g0.n
    w0_v1, w0_v2 = transmission(g0, i0[v1]), transmission(g0, i0[v2])
    d0 = bfs_distances(g0, i0[v1])[i0[v2]]
    d1 = bfs_distances(g1, i1[v1])[i1[u1]]
    d2 = bfs_distances(g2, i2[v2])[i2[u2]]
    w1_v1, w1_u1 = transmission(g1, i1[v1]), transmission(g1, i1[u1])
    w2_v2, w2_u2 = transmission(g2, i2[v2]), transmission(g2, i2[u2])
    # W(G) - W(G') and W(G) - W(G'') from the three-part chain decomposition
    loss1 = (n1 - 1) * ((w2_v2 - w2_u2) + (w0_v1 - w0_v2) + d0 * (n2 - 1) - d2 * (n0 - 1))
    loss2 = (n2 - 1) * ((w1_v1 - w1_u1) + (w0_v2 - w0_v1) + d0 * (n1 - 1) - d1 * (n0 - 1))
    g_first = _move_block(g, B1, v1, u2)
    g_second = _move_block(g, B2, v2, u1)
    return (
        RewriteResult(g, g_first, -loss1, "reattach_terminal_pair", False),
        RewriteResult(g, g_second, -loss2, "reattach_terminal_pair", False),
    )


@dataclass(frozen=True)
class MergeSite:
    """Chain G0 -v1- G1 -v- G2 -v2- G3 with G1, G2 cycle blocks (oriented so n0 <= n3)."""

    block1: int
    block2: int
    v1: int
    v: int
    v2: int
    n0: int
    n1: int
    n2: int
    n3: int

    @property
    def k(self) -> int:
        return self.n1 + self.n2 - 1

    def equality_case(self) -> bool:
        """The two configurations in which the merge cannot increase W."""
        k = self.k
        return (self.n1 == k - 1 and self.n2 == 2) or (
            self.n1 == 2 and self.n2 == k - 1 and self.n0 == self.n3
        )


def merge_sites(g: Graph, b1: int, b2: int, dec: Optional[BlockDecomposition] = None) -> list[MergeSite]:
    """All legal orientations of the adjacent cycle blocks ``b1``, ``b2``.

    Empty if the pair does not sit in chain position with antipodal attachments.
    """
    dec = dec or block_decomposition(g)
    B1, B2 = _block_index(dec, b1), _block_index(dec, b2)
    if b1 == b2 or not (_is_cycle_block(B1) and _is_cycle_block(B2)):
        return []
    common = B1.vertices & B2.vertices
    if len(common) != 1:
        return []
    (v,) = common
    if len(dec.blocks_at(v)) != 2:
        return []
    sides = []
    for this, B in ((b1, B1), (b2, B2)):
        others = [x for x in dec.attachments(this) if x != v]
        if len(others) > 1:
            return []
        if others:
            far = others[0]
            if _block_distance(g, B, v, far) != B.size // 2:
                return []
            n_out = _hanging_mask(g, B, far).bit_count()
        else:
            far = antipode(g, B, v)
            n_out = 1
        sides.append((this, B, far, n_out))
    (ba, Ba, fa, na), (bb, Bb, fb, nb) = sides
    sites = []
    # orientation 1: G0 hangs at fa, G3 at fb; orientation 2 reversed
    for (x, X, fx, nx), (y, Y, fy, ny) in (((ba, Ba, fa, na), (bb, Bb, fb, nb)),
                                          ((bb, Bb, fb, nb), (ba, Ba, fa, na))):
        if nx <= ny and ny >= 2:
            sites.append(MergeSite(x, y, fx, v, fy, nx, X.size, Y.size, ny))
    return sites


def merge_cycle_pair(g: Graph, site: MergeSite, dec: Optional[BlockDecomposition] = None) -> RewriteResult:
    """Replace C_{n1} - C_{n2} by C_{n1+n2-2} - C_2 inside the chain."""
    dec = dec or block_decomposition(g)
    B1, B2 = _block_index(dec, site.block1), _block_index(dec, site.block2)
    if site.n0 > site.n3 or site.n3 < 2:
        raise RewriteError("merge site must satisfy n0 <= n3 and n3 >= 2")
    verts = B1.vertices | B2.vertices
    k = len(verts)
    if k != site.k:
        raise RewriteError("merge site does not match the blocks")
    big = [site.v1] + sorted(verts - {site.v1, site.v2})  # k - 1 vertices
    u = big[(k - 1) // 2]
    new_edges = _cycle_edges(big) + [(u, site.v2)]
    after = _replace_edges(g, B1.edges | B2.edges, new_edges)
    # H = C_{n1} - C_{n2} and H' = C_{k-1} - C_2 with their outer attachments
    h = amalgam(cycle(site.n1), site.n1 // 2, cycle(site.n2), 0)
    h_v1, h_v2 = 0, site.n1 - 1 + site.n2 // 2
    h2 = amalgam(cycle(k - 1), (k - 1) // 2, cycle(2), 0)
    h2_v1, h2_v2 = 0, k - 1
    d_h = bfs_distances(h, h_v1)[h_v2]
    d_h2 = bfs_distances(h2, h2_v1)[h2_v2]
    delta = (
        (wiener(h2) - wiener(h))
        + (transmission(h2, h2_v1) - transmission(h, h_v1)) * (site.n0 - 1)
        + (transmission(h2, h2_v2) - transmission(h, h_v2)) * (site.n3 - 1)
        + (d_h2 - d_h) * (site.n0 - 1) * (site.n3 - 1)
    )
    return RewriteResult(g, after, delta, "merge_cycle_pair", not site.equality_case())


# driver

MOVE_ORDER = ("cyclize_terminal", "cyclize_traversal", "merge_cycle_pair", "reattach_terminal_pair")


def candidate_moves(g: Graph, rule: str, dec: Optional[BlockDecomposition] = None) -> list[RewriteResult]:
    """Every legal instantiation of one move class on ``g``."""
    dec = dec or block_decomposition(g)
    out: list[RewriteResult] = []
    p = dec.block_count
    if rule == "cyclize_terminal":
        for i, b in enumerate(dec.blocks):
            if b.size >= 3 and len(dec.attachments(i)) == 1:
                out.append(cyclize_terminal(g, i, dec))
    elif rule == "cyclize_traversal":
        for i, b in enumerate(dec.blocks):
            if b.size >= 3 and len(dec.attachments(i)) == 2:
                out.append(cyclize_traversal(g, i, dec))
    elif rule == "merge_cycle_pair":
        for i in range(p):
            for j in range(i + 1, p):
                if dec.blocks[i].vertices & dec.blocks[j].vertices:
                    for site in merge_sites(g, i, j, dec):
                        out.append(merge_cycle_pair(g, site, dec))
    elif rule == "reattach_terminal_pair":
        if p >= 3:
            terminal = [
                i for i in range(p)
                if len(dec.attachments(i)) == 1 and dec.blocks[i].is_cycle()
            ]
            for x in range(len(terminal)):
                for y in range(x + 1, len(terminal)):
                    first, second = reattach_terminal_pair(g, terminal[x], terminal[y], dec)
                    out.append(max((first, second), key=lambda r: r.delta_w))
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return out


def hill_climb(g: Graph, max_steps: int = 10_000) -> tuple[Graph, list[RewriteResult]]:
    """Apply improving moves in priority order until none increases W.

    Within a move class the largest increase wins; ties go to the result
    with the smallest canonical code.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("hill_climb needs a connected graph")
    trace: list[RewriteResult] = []
    current = g
    for _ in range(max_steps):
        dec = block_decomposition(current)
        chosen = None
        for rule in MOVE_ORDER:
            improving = [r for r in candidate_moves(current, rule, dec) if r.delta_w > 0]
            if improving:
                best = max(r.delta_w for r in improving)
                top = [r for r in improving if r.delta_w == best]
                chosen = min(top, key=lambda r: canonical_label(r.after).code)
                break
        if chosen is None:
            return current, trace
        trace.append(chosen)
        current = chosen.after
    raise RuntimeError("hill_climb did not reach a fixpoint")


def is_normalized(g: Graph, dec: Optional[BlockDecomposition] = None) -> bool:
    """Terminal blocks are cycles or edges; traversal blocks are edges or antipodal cycles."""
    dec = dec or block_decomposition(g)
    for i, b in enumerate(dec.blocks):
        att = dec.attachments(i)
        if len(att) == 1 and not b.is_cycle():
            return False
        if len(att) == 2:
            if not b.is_cycle():
                return False
            bg, index = _block_graph(g, b)
            if bfs_distances(bg, index[att[0]])[index[att[1]]] != b.size // 2:
                return False
    return True
