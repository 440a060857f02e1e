"""Blocks, claw-free block graphs, line graphs of trees and signed block kinds."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .analysis import Check
from .graphs import EdgeSignedGraph, GraphError, PlainGraph


@dataclass(frozen=True)
class BlockStructure:
    """Blocks (as frozensets, in discovery order) with cut vertices and block graph.

    ``singletons`` lists isolated vertices; each also appears as a one-vertex
    block at the end of ``blocks`` so that every vertex lies in some block.
    """

    blocks: tuple
    cut_vertices: frozenset
    block_graph: PlainGraph
    singletons: frozenset

    def blocks_of(self, v) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    @property
    def proper_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if len(b) >= 2]


def blocks_and_cut_vertices(g: PlainGraph) -> BlockStructure:
    """Hopcroft-Tarjan lowpoint decomposition (iterative)."""
    adj = g.adjacency()
    order = {v: i for i, v in enumerate(g.vertices)}
    nbrs = {v: sorted(adj[v], key=order.__getitem__) for v in g.vertices}
    disc: dict = {}
    low: dict = {}
    blocks: list[frozenset] = []
    cuts: set = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple] = []
        stack = [(root, None, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(nbrs[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
                if parent != root:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    singles = frozenset(v for v in g.vertices if not adj[v])
    blocks.extend(frozenset([v]) for v in g.vertices if v in singles)
    bg_edges = [(i, j) for i, j in combinations(range(len(blocks)), 2) if blocks[i] & blocks[j]]
    return BlockStructure(tuple(blocks), frozenset(cuts), PlainGraph(tuple(range(len(blocks))), bg_edges), singles)


# -- forbidden induced subgraphs ------------------------------------------------

def find_claw(g: PlainGraph):
    adj = g.adjacency()
    for v in g.vertices:
        for a, b, c in combinations(sorted(adj[v], key=g.vertices.index), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return [v, a, b, c]
    return None


def find_diamond(g: PlainGraph):
    adj = g.adjacency()
    for e in sorted(g.edges, key=lambda e: sorted(g.vertices.index(x) for x in e)):
        u, v = sorted(e, key=g.vertices.index)
        common = sorted(adj[u] & adj[v], key=g.vertices.index)
        for a, b in combinations(common, 2):
            if b not in adj[a]:
                return [u, v, a, b]
    return None


def find_hole(g: PlainGraph):
    """An induced cycle of length >= 4, as a vertex list in cyclic order."""
    adj = g.adjacency()
    for v in g.vertices:
        nv = sorted(adj[v], key=g.vertices.index)
        for a, b in combinations(nv, 2):
            if b in adj[a]:
                continue
            banned = (adj[v] - {a, b}) | {v}
            prev = {a: None}
            q = deque([a])
            while q and b not in prev:
                x = q.popleft()
                for y in sorted(adj[x], key=g.vertices.index):
                    if y not in prev and y not in banned:
                        prev[y] = x
                        q.append(y)
            if b in prev:
                path = []
                x = b
                while x is not None:
                    path.append(x)
                    x = prev[x]
                return [v] + path[::-1]
    return None


def is_claw_free_block_graph(g: PlainGraph) -> Check:
    """True iff every block is a clique and there is no induced K_{1,3}.

    On failure the witness is ``(pattern, vertices)`` with pattern one of
    ``"K1,3"``, ``"K1,1,2"``, ``"C<n>"``.
    """
    claw = find_claw(g)
    if claw:
        return Check(False, "induced K1,3", ("K1,3", claw))
    diamond = find_diamond(g)
    if diamond:
        return Check(False, "induced K1,1,2", ("K1,1,2", diamond))
    hole = find_hole(g)
    if hole:
        return Check(False, f"induced C{len(hole)}", (f"C{len(hole)}", hole))
    bs = blocks_and_cut_vertices(g)
    for b in bs.blocks:
        for x, y in combinations(b, 2):
            if not g.has_edge(x, y):
                raise AssertionError("block without diamond or hole is not a clique")
    return Check(True)


# -- line graphs of trees -------------------------------------------------------

@dataclass(frozen=True)
class LineTree:
    tree: PlainGraph
    edge_map: dict  # frozenset tree edge -> vertex of g

    def vertex_edge(self, v) -> frozenset:
        return next(e for e, x in self.edge_map.items() if x == v)

    def is_end_edge(self, v) -> bool:
        adj = self.tree.adjacency()
        return any(len(adj[x]) == 1 for x in self.vertex_edge(v))

    def to_json(self) -> dict:
        return {
            "tree": {"vertices": [str(x) for x in self.tree.vertices],
                     "edges": [sorted(map(str, e)) for e in sorted(self.tree.edges, key=lambda e: sorted(map(str, e)))]},
            "edge_to_vertex": [{"edge": sorted(map(str, e)), "vertex": str(v)}
                               for e, v in sorted(self.edge_map.items(), key=lambda kv: str(kv[1]))],
        }


class PreconditionError(GraphError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def line_tree_reconstruct(g: PlainGraph) -> LineTree:
    """Tree T with L(T) isomorphic to a connected claw-free block graph ``g``."""
    if not g.vertices or not g.is_connected():
        raise PreconditionError("line-tree reconstruction needs a connected non-empty graph")
    check = is_claw_free_block_graph(g)
    if not check:
        raise PreconditionError(f"not a claw-free block graph: {check.violation}", check.witness)
    bs = blocks_and_cut_vertices(g)
    nodes = [("B", i) for i in range(len(bs.blocks))]
    edge_map = {}
    for c in bs.cut_vertices:
        i, j = bs.blocks_of(c)
        edge_map[frozenset((("B", i), ("B", j)))] = c
    for i, b in enumerate(bs.blocks):
        for v in b:
            if v not in bs.cut_vertices:
                leaf = ("L", v)
                nodes.append(leaf)
                edge_map[frozenset((("B", i), leaf))] = v
    tree = PlainGraph(tuple(nodes), frozenset(edge_map))
    lt = LineTree(tree, edge_map)
    if not verify_line_graph(g, lt):
        raise AssertionError("reconstructed tree does not reproduce g")
    return lt


def verify_line_graph(g: PlainGraph, lt: LineTree) -> bool:
    """Check that the edge map is an isomorphism L(T) -> g and T is a tree."""
    t = lt.tree
    if len(t.edges) != len(t.vertices) - 1 or not t.is_connected():
        return False
    if sorted(map(str, lt.edge_map.values())) != sorted(map(str, g.vertices)) or len(lt.edge_map) != len(g.vertices):
        return False
    for e1, e2 in combinations(lt.edge_map, 2):
        if bool(e1 & e2) != g.has_edge(lt.edge_map[e1], lt.edge_map[e2]):
            return False
    return True


def line_graph(t: PlainGraph) -> tuple[PlainGraph, dict]:
    """L(t) with vertex ids ``"a~b"``; also returns vertex -> tree edge."""
    names = {}
    for e in t.edges:
        a, b = sorted(map(str, e))
        names[e] = f"{a}~{b}"
    order = sorted(names, key=names.__getitem__)
    edges = [(names[e1], names[e2]) for e1, e2 in combinations(order, 2) if e1 & e2]
    return PlainGraph(tuple(names[e] for e in order), edges), {names[e]: e for e in order}


# -- distances ------------------------------------------------------------------

def _bfs(adj, src) -> dict:
    dist = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def unique_shortest_path(g: PlainGraph, a, b) -> list:
    adj = g.adjacency()
    dist = _bfs(adj, a)
    if b not in dist:
        raise GraphError(f"{a!r} and {b!r} are not connected")
    counts = {a: 1}
    for x in sorted(dist, key=dist.__getitem__):
        for y in adj[x]:
            if dist.get(y) == dist[x] + 1:
                counts[y] = counts.get(y, 0) + counts[x]
    if counts[b] != 1:
        raise AssertionError(f"{counts[b]} shortest paths between {a!r} and {b!r}; block graphs have one")
    path = [b]
    while path[-1] != a:
        x = path[-1]
        path.append(next(y for y in adj[x] if dist.get(y) == dist[x] - 1))
    return path[::-1]


@dataclass(frozen=True)
class BlockDistance:
    path: tuple
    d_graph: int
    overlap: int
    d_block_graph: int


def block_distance_check(g: PlainGraph, b1: int, b2: int, v1, v2, structure: BlockStructure | None = None) -> BlockDistance:
    """Verify d_blockgraph(b1,b2) = d_g(v1,v2) + 3 - |P cap (b1 u b2)|."""
    bs = structure or blocks_and_cut_vertices(g)
    B1, B2 = bs.blocks[b1], bs.blocks[b2]
    if B1 & B2:
        raise GraphError("blocks share a vertex")
    if v1 not in B1 or v2 not in B2:
        raise GraphError("vertices are not in the claimed blocks")
    path = unique_shortest_path(g, v1, v2)
    s = len(set(path) & (B1 | B2))
    dist_b = _bfs(bs.block_graph.adjacency(), b1)[b2]
    if dist_b != len(path) - 1 + 3 - s:
        raise AssertionError(f"block distance {dist_b} != {len(path) - 1} + 3 - {s}")
    return BlockDistance(tuple(path), len(path) - 1, s, dist_b)


# -- signed blocks --------------------------------------------------------------

class BlockType(enum.Enum):
    PLUS_CLIQUE = "K+"
    MINUS_EDGE = "K-2"
    T_STAR = "T1*"
    OTHER = "other"


@dataclass(frozen=True)
class BlockKind:
    kind: BlockType
    size: int
    sigma_plus: object = None
    sigma_minus: object = None

    def __str__(self):
        if self.kind is BlockType.PLUS_CLIQUE:
            return f"K+{self.size}"
        return self.kind.value


def classify_block(s: EdgeSignedGraph, block, marked=None, structure: BlockStructure | None = None) -> BlockKind:
    block = frozenset(block)
    bs = structure or blocks_and_cut_vertices(s.underlying())
    if block not in bs.blocks:
        raise GraphError(f"{sorted(map(str, block))} is not a block of the underlying graph")
    if len(block) < 2:
        raise GraphError("singleton blocks are not classified")
    pairs = [frozenset(p) for p in combinations(block, 2)]
    plus = [p for p in pairs if p in s.plus_edges]
    minus = [p for p in pairs if p in s.minus_edges]
    n = len(block)
    if len(plus) == len(pairs):
        return BlockKind(BlockType.PLUS_CLIQUE, n)
    if n == 2 and minus:
        a, b = sorted(block, key=str)
        return BlockKind(BlockType.MINUS_EDGE, 2, a, b)
    if n == 3 and marked in block:
        v1, v2 = sorted(block - {marked}, key=str)
        if plus == [frozenset((v1, v2))] and set(minus) == {frozenset((marked, v1)), frozenset((marked, v2))}:
            return BlockKind(BlockType.T_STAR, 3)
    return BlockKind(BlockType.OTHER, n)
