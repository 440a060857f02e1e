"""Special graphs, decompositions and reduced representations of Hoffman graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .graphs import EdgeSignedGraph, GraphError, HoffmanGraph, PlainGraph
from .spectral import b_matrix, rank


class InternalConsistencyError(AssertionError):
    pass


@dataclass(frozen=True)
class Check:
    """A boolean outcome carrying the first violated condition, if any."""

    ok: bool
    violation: str | None = None
    witness: object = None

    def __bool__(self):
        return self.ok


def special_graph(h: HoffmanGraph) -> EdgeSignedGraph:
    fats = h.fat_map()
    plus, minus = [], []
    for u, v in combinations(h.slim, 2):
        common = fats[u] & fats[v]
        adj = h.adjacent(u, v)
        if adj and not common:
            plus.append(frozenset((u, v)))
        elif not adj and common:
            minus.append(frozenset((u, v)))
    return EdgeSignedGraph(h.slim, frozenset(plus), frozenset(minus))


def is_indecomposable(h: HoffmanGraph) -> bool:
    if not h.slim:
        raise GraphError("indecomposability is only defined for Hoffman graphs with a slim vertex")
    return special_graph(h).underlying().is_connected()


@dataclass(frozen=True)
class Decomposition:
    parts: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))

    def to_json(self) -> dict:
        return {"parts": [sorted(map(str, p)) for p in self.parts]}


def validate_decomposition(h: HoffmanGraph, d: Decomposition) -> Check:
    verts = set(h.vertices)
    for i, part in enumerate(d.parts):
        unknown = part - verts
        if unknown:
            raise GraphError(f"decomposition part {i} references unknown vertices {sorted(map(str, unknown))}")
    fats = h.fat_map()
    slim = set(h.slim)
    if not d.parts:
        return Check(False, "empty family")
    for i, part in enumerate(d.parts):
        if not part:
            return Check(False, f"part {i} is empty", i)
        sub = {e for e in h.edges if e <= part}
        touched = set().union(*sub) if sub else set()
        for f in part - slim:
            if f not in touched:
                return Check(False, f"part {i}: fat vertex {f!r} is isolated in the induced subgraph", (i, f))
    if set().union(*d.parts) != verts:
        missing = verts - set().union(*d.parts)
        return Check(False, "(i) parts do not cover V(h)", sorted(map(str, missing)))
    owner = {}
    for i, part in enumerate(d.parts):
        for v in part & slim:
            if v in owner:
                return Check(False, f"(ii) slim vertex {v!r} lies in parts {owner[v]} and {i}", v)
            owner[v] = i
    for i, part in enumerate(d.parts):
        for v in part & slim:
            if not fats[v] <= part:
                return Check(False, f"(iii) fat neighbours of {v!r} are not inside part {i}", v)
    for x, y in combinations(h.slim, 2):
        if owner[x] == owner[y]:
            continue
        c = len(fats[x] & fats[y])
        if c > 1:
            return Check(False, f"(iv) {x!r} and {y!r} in different parts share {c} fat neighbours", (x, y))
        if (c == 1) != h.adjacent(x, y):
            return Check(False, f"(iv) {x!r} and {y!r}: one common fat neighbour iff adjacent fails", (x, y))
    return Check(True)


def _inseparable_pairs(h: HoffmanGraph) -> list[tuple]:
    """Adjacent slim pairs with two or more common fat neighbours.

    Such a pair carries no special edge, yet condition (iv) forbids putting
    its ends in different parts.
    """
    fats = h.fat_map()
    return [(u, v) for u, v in combinations(h.slim, 2) if h.adjacent(u, v) and len(fats[u] & fats[v]) >= 2]


def _slim_components(h: HoffmanGraph) -> list[set]:
    s = special_graph(h)
    links = set(s.plus_edges | s.minus_edges) | {frozenset(p) for p in _inseparable_pairs(h)}
    return [set(c) for c in PlainGraph(h.slim, links).components()]


def decompose_by_special_components(h: HoffmanGraph) -> Decomposition:
    """The finest decomposition: components of U(S(h)), extended by fat neighbours.

    Components joined by an adjacent pair with several common fat neighbours
    are merged, since no decomposition can separate that pair; without such
    pairs the parts are exactly the components of U(S(h)).
    """
    fats = h.fat_map()
    parts = []
    for comp in _slim_components(h):
        part = set(comp)
        for v in comp:
            part |= fats[v]
        parts.append(frozenset(part))
    d = Decomposition(tuple(parts))
    check = validate_decomposition(h, d)
    if not check:
        raise InternalConsistencyError(f"component decomposition failed validation: {check.violation}")
    return d


def is_indecomposable_by_definition(h: HoffmanGraph) -> bool:
    """No decomposition with two or more parts exists.

    Agrees with ``is_indecomposable`` unless two adjacent slim vertices share
    at least two fat neighbours.
    """
    if not h.slim:
        raise GraphError("indecomposability is only defined for Hoffman graphs with a slim vertex")
    return len(_slim_components(h)) == 1


@dataclass(frozen=True)
class ReducedRepresentation:
    norm: int
    dimension: int
    vectors: Mapping

    def __post_init__(self):
        vecs = {k: tuple(Fraction(x) for x in v) for k, v in dict(self.vectors).items()}
        object.__setattr__(self, "vectors", vecs)

    def gram(self, order: Iterable) -> list[list[Fraction]]:
        order = list(order)
        return [[sum((a * b for a, b in zip(self.vectors[u], self.vectors[v])), Fraction(0)) for v in order]
                for u in order]

    def is_linearly_independent(self, order: Iterable | None = None) -> bool:
        order = list(order) if order is not None else list(self.vectors)
        return rank([self.vectors[v] for v in order]) == len(order)

    def to_json(self) -> dict:
        return {"m": self.norm, "N": self.dimension,
                "vectors": {str(k): [str(x) for x in v] for k, v in self.vectors.items()}}


def verify_reduced_representation(h: HoffmanGraph, r: ReducedRepresentation) -> Check:
    if set(r.vectors) != set(h.slim):
        raise GraphError("representation must cover exactly the slim vertices")
    for v, vec in r.vectors.items():
        if len(vec) != r.dimension:
            raise GraphError(f"vector for {v!r} has length {len(vec)}, expected N={r.dimension}")
    fats = h.fat_map()
    gram = r.gram(h.slim)
    for i, x in enumerate(h.slim):
        for j, y in enumerate(h.slim):
            if j < i:
                continue
            if x == y:
                want = r.norm - len(fats[x])
                case = "diagonal"
            elif h.adjacent(x, y):
                want = 1 - len(fats[x] & fats[y])
                case = "adjacent"
            else:
                want = -len(fats[x] & fats[y])
                case = "non-adjacent"
            if gram[i][j] != want:
                return Check(False, f"{case} case fails at ({x!r},{y!r}): <psi,psi>={gram[i][j]}, want {want}", (x, y))
    b = b_matrix(h)
    for i in range(b.order):
        for j in range(b.order):
            if gram[i][j] != b[i, j] + (r.norm if i == j else 0):
                return Check(False, "Gram(psi) != B + mI", (i, j))
    return Check(True)
