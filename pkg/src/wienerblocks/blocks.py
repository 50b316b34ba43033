"""Blocks (maximal nonseparable subgraphs), cut-vertices and the blocks-tree."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .graph import DisconnectedGraphError, Graph, GraphError, is_connected, iter_bits

Edge = tuple[int, int]


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def is_cycle(self) -> bool:
        """True for cycles on >= 3 vertices and for a single edge (C_2 = K_2)."""
        return len(self.edges) == len(self.vertices) or len(self.vertices) == 2


@dataclass(frozen=True)
class BlockDecomposition:
    graph: Graph
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def attachments(self, i: int) -> list[int]:
        """Cut-vertices of block ``i``, i.e. its attachment vertices."""
        return sorted(self.blocks[i].vertices & self.cut_vertices)


class SubgraphKind(str, Enum):
    TERMINAL = "terminal"
    TRAVERSAL = "traversal"
    INTERNAL = "internal"


@dataclass(frozen=True)
class SubgraphClass:
    kind: SubgraphKind
    attachment_vertices: frozenset[int]


@dataclass(frozen=True)
class BlocksTree:
    """Bipartite incidence tree; block nodes are block indices, cut nodes are vertices."""

    block_nodes: tuple[int, ...]
    cut_nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # (block index, cut-vertex)

    def block_degree(self, i: int) -> int:
        return sum(1 for b, _ in self.edges if b == i)

    def cut_degree(self, v: int) -> int:
        return sum(1 for _, c in self.edges if c == v)

    def leaf_blocks(self) -> list[int]:
        if len(self.block_nodes) == 1:
            return []
        return [b for b in self.block_nodes if self.block_degree(b) == 1]

    def is_tree(self) -> bool:
        nodes = [("B", b) for b in self.block_nodes] + [("C", c) for c in self.cut_nodes]
        if len(nodes) != len(self.edges) + 1:
            return False
        nbrs: dict[tuple[str, int], list[tuple[str, int]]] = {x: [] for x in nodes}
        for b, c in self.edges:
            nbrs[("B", b)].append(("C", c))
            nbrs[("C", c)].append(("B", b))
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for y in nbrs[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(nodes)


def _biconnected_edge_sets(g: Graph) -> tuple[list[set[Edge]], set[int]]:
    # iterative Hopcroft-Tarjan with an edge stack
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    comps: list[set[Edge]] = []
    edge_stack: list[Edge] = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((w, u, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            comp: set[Edge] = set()
            while True:
                a, b = edge_stack.pop()
                comp.add((a, b) if a < b else (b, a))
                if (a, b) == (parent, u):
                    break
            comps.append(comp)
    if root_children > 1:
        cuts.add(root)
    return comps, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Decompose a connected graph; blocks ordered by smallest vertex, then size."""
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition(g, (), frozenset())
    comps, cuts = _biconnected_edge_sets(g)
    blocks = []
    for es in comps:
        vs = frozenset(x for e in es for x in e)
        blocks.append(Block(vs, frozenset(es)))
    blocks.sort(key=lambda b: (min(b.vertices), b.size, sorted(b.vertices)))
    return BlockDecomposition(g, tuple(blocks), frozenset(cuts))


def block_count(g: Graph) -> int:
    return block_decomposition(g).block_count


def blocks_tree(dec: BlockDecomposition) -> BlocksTree:
    edges = []
    for i, b in enumerate(dec.blocks):
        for c in sorted(b.vertices & dec.cut_vertices):
            edges.append((i, c))
    return BlocksTree(
        tuple(range(dec.block_count)), tuple(sorted(dec.cut_vertices)), tuple(edges)
    )


def classify(dec: BlockDecomposition, subgraph: Iterable) -> SubgraphClass:
    """Classify a connected union of blocks by its attachment vertices.

    ``subgraph`` is either a collection of block indices or a collection of
    edges; in the latter case the edges must form whole blocks.
    """
    items = list(subgraph)
    if not items:
        raise GraphError("empty subgraph")
    if all(isinstance(x, int) for x in items):
        idx = set(items)
        if not all(0 <= i < dec.block_count for i in idx):
            raise GraphError("block index out of range")
    else:
        es = {(min(e), max(e)) for e in items}
        idx = {i for i, b in enumerate(dec.blocks) if b.edges & es}
        covered = set().union(*(dec.blocks[i].edges for i in idx)) if idx else set()
        if covered != es:
            raise GraphError("subgraph is not a union of blocks")
    h_vertices: set[int] = set()
    h_edges: set[Edge] = set()
    for i in idx:
        h_vertices |= dec.blocks[i].vertices
        h_edges |= dec.blocks[i].edges
    # connectivity of the union
    start = next(iter(h_vertices))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in iter_bits(dec.graph.adj[u]):
            if w in h_vertices and w not in seen and (min(u, w), max(u, w)) in h_edges:
                seen.add(w)
                stack.append(w)
    if seen != h_vertices:
        raise GraphError("subgraph is disconnected")
    h_mask = sum(1 << v for v in h_vertices)
    attach = {v for v in h_vertices if dec.graph.adj[v] & ~h_mask}
    kind = {1: SubgraphKind.TERMINAL, 2: SubgraphKind.TRAVERSAL}.get(
        len(attach), SubgraphKind.INTERNAL
    )
    return SubgraphClass(kind, frozenset(attach))
