"""Core graph values: Hoffman graphs, edge-signed graphs and plain graphs.

All three are immutable.  Vertex ids are opaque hashables (strings when read
from JSON); the declared vertex order is kept and used wherever a row order is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Hashable, Iterable


class GraphError(ValueError):
    """An invariant of a graph definition is violated."""


def _pair(a, b) -> frozenset:
    return frozenset((a, b))


def _normalize_edges(edges: Iterable, vertices: set, what: str) -> frozenset:
    out = set()
    for pos, e in enumerate(edges):
        e = tuple(e)
        if len(e) != 2:
            raise GraphError(f"{what}: edge #{pos} {list(e)!r} must have exactly two endpoints")
        a, b = e
        if a == b:
            raise GraphError(f"{what}: edge #{pos} is a self-loop at {a!r}")
        for x in (a, b):
            if x not in vertices:
                raise GraphError(f"{what}: edge #{pos} references undeclared vertex {x!r}")
        out.add(_pair(a, b))
    return frozenset(out)


def _check_unique(seq, what: str) -> None:
    seen = set()
    for pos, v in enumerate(seq):
        if v in seen:
            raise GraphError(f"{what}: vertex {v!r} declared twice (position {pos})")
        seen.add(v)


@dataclass(frozen=True)
class PlainGraph:
    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        _check_unique(self.vertices, "graph")
        object.__setattr__(self, "edges", _normalize_edges(self.edges, set(self.vertices), "graph"))

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_edge(self, a, b) -> bool:
        return _pair(a, b) in self.edges

    def induced(self, keep: Iterable) -> PlainGraph:
        keep = set(keep)
        return PlainGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e <= keep),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def components(self) -> list[list]:
        adj = self.adjacency()
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = [v]
            seen.add(v)
            stack = [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            order = {x: i for i, x in enumerate(self.vertices)}
            comps.append(sorted(comp, key=order.__getitem__))
        return comps


@dataclass(frozen=True)
class EdgeSignedGraph:
    vertices: tuple
    plus_edges: frozenset = field(default_factory=frozenset)
    minus_edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        _check_unique(self.vertices, "edge-signed graph")
        vs = set(self.vertices)
        plus = _normalize_edges(self.plus_edges, vs, "edge-signed graph (+)-edges")
        minus = _normalize_edges(self.minus_edges, vs, "edge-signed graph (-)-edges")
        both = plus & minus
        if both:
            e = sorted(map(sorted, both))[0]
            raise GraphError(f"edge-signed graph: {e!r} is both a (+)-edge and a (-)-edge")
        object.__setattr__(self, "plus_edges", plus)
        object.__setattr__(self, "minus_edges", minus)

    def underlying(self) -> PlainGraph:
        """The unsigned graph on the same vertices with all edges."""
        return PlainGraph(self.vertices, self.plus_edges | self.minus_edges)

    def sign(self, a, b) -> int:
        e = _pair(a, b)
        if e in self.plus_edges:
            return 1
        if e in self.minus_edges:
            return -1
        return 0

    def induced(self, keep: Iterable) -> EdgeSignedGraph:
        keep = set(keep)
        return EdgeSignedGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.plus_edges if e <= keep),
            frozenset(e for e in self.minus_edges if e <= keep),
        )

    def same_as(self, other: EdgeSignedGraph) -> bool:
        """Equality as labelled signed graphs, ignoring declaration order."""
        return (
            set(self.vertices) == set(other.vertices)
            and self.plus_edges == other.plus_edges
            and self.minus_edges == other.minus_edges
        )


@dataclass(frozen=True)
class HoffmanGraph:
    """A simple graph with a distinguished coclique of fat vertices.

    Fat vertices must not be isolated.  The empty Hoffman graph is allowed.
    """

    slim: tuple
    fat: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "slim", tuple(self.slim))
        object.__setattr__(self, "fat", tuple(self.fat))
        _check_unique(self.slim + self.fat, "Hoffman graph")
        vs = set(self.slim) | set(self.fat)
        edges = _normalize_edges(self.edges, vs, "Hoffman graph")
        fat = set(self.fat)
        touched = set()
        for e in edges:
            a, b = tuple(e)
            if a in fat and b in fat:
                raise GraphError(
                    f"Hoffman graph: fat vertices must form a coclique, but {a!r} and {b!r} are adjacent"
                )
            touched |= e
        for f in self.fat:
            if f not in touched:
                raise GraphError(f"Hoffman graph: fat vertex {f!r} is isolated")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> tuple:
        return self.slim + self.fat

    def is_slim(self, x) -> bool:
        return x in set(self.slim)

    def adjacent(self, a, b) -> bool:
        return _pair(a, b) in self.edges

    def fat_neighbors(self, x) -> frozenset:
        fat = set(self.fat)
        return frozenset(y for e in self.edges if x in e for y in e if y != x and y in fat)

    def slim_neighbors(self, x) -> frozenset:
        slim = set(self.slim)
        return frozenset(y for e in self.edges if x in e for y in e if y != x and y in slim)

    def fat_map(self) -> dict:
        """Slim vertex -> frozenset of fat neighbours, for every slim vertex."""
        fat = set(self.fat)
        out = {v: set() for v in self.slim}
        for e in self.edges:
            a, b = tuple(e)
            if a in fat:
                out[b].add(a)
            elif b in fat:
                out[a].add(b)
        return {v: frozenset(s) for v, s in out.items()}

    def induced(self, keep: Iterable) -> HoffmanGraph:
        return induced_hoffman_subgraph(self, keep)[0]

    def relabel(self, mapping: dict) -> HoffmanGraph:
        """Rename vertices; ids missing from ``mapping`` keep their name."""
        m = lambda x: mapping.get(x, x)
        return HoffmanGraph(
            tuple(map(m, self.slim)),
            tuple(map(m, self.fat)),
            frozenset(frozenset(map(m, e)) for e in self.edges),
        )


def hoffman_graph(slim: Iterable[Hashable], fat: Iterable[Hashable], edges: Iterable) -> HoffmanGraph:
    return HoffmanGraph(tuple(slim), tuple(fat), frozenset(frozenset(e) for e in edges))


def induced_hoffman_subgraph(h: HoffmanGraph, keep: Iterable) -> tuple[HoffmanGraph, frozenset]:
    """Restrict ``h`` to ``keep``.

    Returns the induced Hoffman graph and the set of fat vertices that were
    dropped because they became isolated.
    """
    keep = set(keep)
    unknown = keep - set(h.vertices)
    if unknown:
        raise GraphError(f"induced subgraph: unknown vertex ids {sorted(map(str, unknown))}")
    edges = frozenset(e for e in h.edges if e <= keep)
    touched = set().union(*edges) if edges else set()
    fat = tuple(f for f in h.fat if f in keep and f in touched)
    dropped = frozenset(f for f in h.fat if f in keep and f not in touched)
    slim = tuple(v for v in h.slim if v in keep)
    return HoffmanGraph(slim, fat, edges), dropped


def neighbors(h: HoffmanGraph, x) -> tuple[frozenset, frozenset]:
    if x not in set(h.vertices):
        raise GraphError(f"unknown vertex {x!r}")
    return h.slim_neighbors(x), h.fat_neighbors(x)


def is_fat(h: HoffmanGraph) -> bool:
    return all(h.fat_map().values()) if h.slim else True


def fat_pair_count(h: HoffmanGraph) -> int:
    """Number of induced copies of the one-slim two-fat Hoffman graph."""
    return sum(comb(len(fs), 2) for fs in h.fat_map().values())


def k1t(t: int, slim: str = "v", prefix: str = "f") -> HoffmanGraph:
    """One slim vertex joined to ``t`` fat vertices."""
    fats = [f"{prefix}{i}" for i in range(1, t + 1)]
    return hoffman_graph([slim], fats, [(slim, f) for f in fats])


def complete_pairs(vs: Iterable) -> list[frozenset]:
    return [_pair(a, b) for a, b in combinations(vs, 2)]
