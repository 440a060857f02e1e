"""The main characterisation and its constructive directions.

``check_theorem_conditions`` evaluates the five combinatorial conditions on
the special graph and compares them with the exact spectral verdict at -3.
``build_psi`` produces the integral norm-3 representation used for the
converse, ``construct_hoffman_from_signed`` realises an admissible signed
graph, and ``check_modified_adjacency`` handles the modified adjacency matrix of a
plain graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .analysis import (
    Check,
    ReducedRepresentation,
    is_indecomposable,
    is_indecomposable_by_definition,
    special_graph,
    verify_reduced_representation,
)
from .canon import hoffman_canonical_order
from .graphs import EdgeSignedGraph, GraphError, HoffmanGraph, PlainGraph, fat_pair_count, hoffman_graph, is_fat
from .spectral import Relation, RationalSymmetricMatrix, SpectralVerdict, b_matrix, classify_lambda_min
from .structure import (
    BlockKind,
    BlockStructure,
    BlockType,
    LineTree,
    PreconditionError,
    blocks_and_cut_vertices,
    classify_block,
    is_claw_free_block_graph,
    line_tree_reconstruct,
)

CONDITIONS = ("i", "ii", "iii", "iv", "v")
STAR_KINDS = (BlockType.PLUS_CLIQUE, BlockType.MINUS_EDGE, BlockType.T_STAR)
OTHER_KINDS = (BlockType.PLUS_CLIQUE, BlockType.MINUS_EDGE)


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, (list, tuple, set, frozenset)):
        items = [_witness_json(x) for x in w]
        return sorted(items, key=str) if isinstance(w, (set, frozenset)) else items
    if isinstance(w, (int, str)):
        return w
    return str(w)


@dataclass(frozen=True)
class TheoremReport:
    marked_vertex: object
    conditions: dict  # condition id -> Check
    spectral_verdict: SpectralVerdict
    blocks: tuple = field(default=(), compare=False)

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions[c].ok for c in CONDITIONS)

    @property
    def equivalence_holds(self) -> bool:
        return (self.spectral_verdict.relation is Relation.GREATER) == self.all_conditions

    def to_json(self) -> dict:
        return {
            "marked_vertex": str(self.marked_vertex),
            "conditions": {c: {"holds": self.conditions[c].ok,
                               "violation": self.conditions[c].violation,
                               "witness": _witness_json(self.conditions[c].witness)} for c in CONDITIONS},
            "spectral_verdict": self.spectral_verdict.to_json(),
            "all_conditions": self.all_conditions,
            "equivalence_holds": self.equivalence_holds,
        }


def _block_conditions(s: EdgeSignedGraph, v_star, bs: BlockStructure) -> tuple[Check, Check, list]:
    kinds = []
    star_bad = other_bad = None
    star_blocks = [i for i in bs.proper_blocks if v_star in bs.blocks[i]]
    for i in bs.proper_blocks:
        block = bs.blocks[i]
        marked = v_star if v_star in block else None
        kind = classify_block(s, block, marked, bs)
        kinds.append((block, kind))
        allowed = STAR_KINDS if marked is not None else OTHER_KINDS
        if kind.kind not in allowed:
            bad = (sorted(block, key=str), str(kind))
            if marked is not None:
                star_bad = star_bad or bad
            else:
                other_bad = other_bad or bad
    if star_bad:
        iv = Check(False, f"block containing v* is {star_bad[1]}", star_bad[0])
    elif len(star_blocks) > 1:
        iv = Check(True, None, "v* lies in several blocks; all are of an allowed kind")
    else:
        iv = Check(True)
    v = Check(False, f"block not containing v* is {other_bad[1]}", other_bad[0]) if other_bad else Check(True)
    return iv, v, kinds


def check_theorem_conditions(h: HoffmanGraph, v_star) -> TheoremReport:
    problems = []
    if v_star not in set(h.slim):
        raise PreconditionError(f"{v_star!r} is not a slim vertex")
    if not is_fat(h):
        problems.append("not fat: some slim vertex has no fat neighbour")
    if not is_indecomposable_by_definition(h):
        problems.append("decomposable: a decomposition with two or more parts exists")
    nf = len(h.fat_neighbors(v_star))
    if nf != 2:
        problems.append(f"v* has {nf} fat neighbours, expected 2")
    if problems:
        raise PreconditionError("; ".join(problems), problems)

    s = special_graph(h)
    u = s.underlying()
    bs = blocks_and_cut_vertices(u)
    claw = is_claw_free_block_graph(u)
    k12 = fat_pair_count(h)
    cond = {
        "i": claw,
        "ii": Check(True) if k12 == 1 else Check(False, f"{k12} induced copies of K1,2",
                                                  sorted((str(v) for v, fs in h.fat_map().items() if len(fs) >= 2))),
        "iii": Check(False, "v* is a cut vertex", v_star) if v_star in bs.cut_vertices else Check(True),
    }
    cond["iv"], cond["v"], kinds = _block_conditions(s, v_star, bs)
    verdict = classify_lambda_min(b_matrix(h), 3)
    return TheoremReport(v_star, cond, verdict, tuple(kinds))


def k12_candidates(h: HoffmanGraph) -> list:
    fats = h.fat_map()
    return [v for v in h.slim if len(fats[v]) == 2]


def build_psi(h: HoffmanGraph, v_star) -> ReducedRepresentation:
    """Integral reduced representation of norm 3 with linearly independent vectors.

    Coordinate 0 belongs to the block of v*, coordinates 1..p to the other
    blocks and p+1..p+q to the non-cut slim vertices other than v*.
    """
    report = check_theorem_conditions(h, v_star)
    failed = [c for c in CONDITIONS if not report.conditions[c]]
    if failed:
        raise PreconditionError(f"condition ({failed[0]}) fails: {report.conditions[failed[0]].violation}", failed)
    s = special_graph(h)
    bs = blocks_and_cut_vertices(s.underlying())
    rank_of = {v: i for i, v in enumerate(hoffman_canonical_order(h))}
    key = lambda blk: sorted(rank_of[v] for v in blk)
    proper = [bs.blocks[i] for i in bs.proper_blocks]
    star = [b for b in proper if v_star in b]
    others = sorted((b for b in proper if v_star not in b), key=key)
    w = sorted((v for v in h.slim if v != v_star and v not in bs.cut_vertices), key=rank_of.__getitem__)
    p, q = len(others), len(w)
    n = 1 + p + q
    psi = {v: [0] * n for v in h.slim}
    psi[v_star][0] = 1
    if star:
        b0 = star[0]
        kind = classify_block(s, b0, v_star, bs)
        sign = 1 if kind.kind is BlockType.PLUS_CLIQUE else -1
        for v in b0 - {v_star}:
            psi[v][0] = sign
    for i, b in enumerate(others, start=1):
        kind = classify_block(s, b, None, bs)
        if kind.kind is BlockType.PLUS_CLIQUE:
            for v in b:
                psi[v][i] = 1
        else:
            psi[kind.sigma_plus][i] = 1
            psi[kind.sigma_minus][i] = -1
    for k, v in enumerate(w, start=p + 1):
        psi[v][k] = 1
    return ReducedRepresentation(3, n, psi)


# -- admissible signed graphs ---------------------------------------------------

@dataclass(frozen=True)
class SignedAdmissibilityReport:
    marked_vertex: object
    conditions: dict

    @property
    def admissible(self) -> bool:
        return all(self.conditions[c].ok for c in CONDITIONS)

    def to_json(self) -> dict:
        return {"marked_vertex": str(self.marked_vertex), "admissible": self.admissible,
                "conditions": {c: {"holds": self.conditions[c].ok, "violation": self.conditions[c].violation,
                                   "witness": _witness_json(self.conditions[c].witness)} for c in CONDITIONS}}


def signed_admissibility(s: EdgeSignedGraph, v_star) -> SignedAdmissibilityReport:
    if v_star not in set(s.vertices):
        raise GraphError(f"unknown vertex {v_star!r}")
    u = s.underlying()
    if not u.is_connected():
        raise GraphError("signed graph must be connected")
    bs = blocks_and_cut_vertices(u)
    minus_deg = {v: 0 for v in s.vertices}
    for e in s.minus_edges:
        for x in e:
            minus_deg[x] += 1
    heavy = sorted((v for v, d in minus_deg.items() if d > 1 and v != v_star), key=str)
    cond = {
        "i": is_claw_free_block_graph(u),
        "ii": Check(False, "vertex other than v* on several (-)-edges", heavy) if heavy else Check(True),
        "iii": Check(False, "v* is a cut vertex", v_star) if v_star in bs.cut_vertices else Check(True),
    }
    cond["iv"], cond["v"], _ = _block_conditions(s, v_star, bs)
    return SignedAdmissibilityReport(v_star, cond)


def construct_hoffman_from_signed(s: EdgeSignedGraph, v_star) -> HoffmanGraph:
    """Realise an admissible signed graph as a fat Hoffman graph with special graph ``s``.

    Fat ids: ``f[a|b]`` for a (-)-edge, ``f[v]`` for a pendant fat, ``f[v*]1``/``f[v*]2``
    for the pendant fats at v*.  A one-vertex signed graph gives K_{1,2}.
    """
    report = signed_admissibility(s, v_star)
    if not report.admissible:
        bad = next(c for c in CONDITIONS if not report.conditions[c])
        raise PreconditionError(f"signed graph not admissible: ({bad}) {report.conditions[bad].violation}", bad)
    bs = blocks_and_cut_vertices(s.underlying())
    fats, edges = [], []
    on_minus = set()
    for e in sorted(s.minus_edges, key=lambda e: sorted(map(str, e))):
        a, b = sorted(e, key=str)
        f = f"f[{a}|{b}]"
        fats.append(f)
        edges += [(a, f), (b, f)]
        on_minus |= e
    star = [bs.blocks[i] for i in bs.proper_blocks if v_star in bs.blocks[i]]
    if not star:
        pend = 2
    else:
        kind = classify_block(s, star[0], v_star, bs).kind
        pend = {BlockType.PLUS_CLIQUE: 2, BlockType.MINUS_EDGE: 1, BlockType.T_STAR: 0}[kind]
    for k in range(1, pend + 1):
        f = f"f[{v_star}]{k}"
        fats.append(f)
        edges.append((v_star, f))
    for v in s.vertices:
        if v != v_star and v not in on_minus:
            f = f"f[{v}]"
            fats.append(f)
            edges.append((v, f))
    edges += [tuple(e) for e in s.plus_edges]
    h = hoffman_graph(s.vertices, fats, edges)
    if not special_graph(h).same_as(s):
        raise AssertionError("constructed graph does not reproduce the signed graph")
    if len(h.fat_neighbors(v_star)) != 2:
        raise AssertionError("v* must end up with two fat neighbours")
    if not is_fat(h) or not is_indecomposable(h):
        raise AssertionError("constructed graph must be fat and indecomposable")
    return h


# -- modified adjacency matrix --------------------------------------------------

def hat_adjacency(g: PlainGraph, v_star) -> RationalSymmetricMatrix:
    if v_star not in set(g.vertices):
        raise GraphError(f"unknown vertex {v_star!r}")
    rows = []
    for a in g.vertices:
        rows.append(tuple(-1 if a == b == v_star else int(g.has_edge(a, b)) for b in g.vertices))
    return RationalSymmetricMatrix(tuple(rows), g.vertices)


def pendant_fat_hoffman(g: PlainGraph, v_star) -> HoffmanGraph:
    """One pendant fat at every vertex, two at v*."""
    fats, edges = [], [tuple(e) for e in g.edges]
    for v in g.vertices:
        for k in range(1, 3 if v == v_star else 2):
            f = f"f[{v}]{k}"
            fats.append(f)
            edges.append((v, f))
    return hoffman_graph(g.vertices, fats, edges)


@dataclass(frozen=True)
class ModifiedAdjacencyReport:
    marked_vertex: object
    spectral_side: bool
    line_tree_side: bool
    verdict: SpectralVerdict
    line_tree: LineTree | None = None
    reason: str | None = None

    @property
    def agree(self) -> bool:
        return self.spectral_side == self.line_tree_side

    def to_json(self) -> dict:
        return {"marked_vertex": str(self.marked_vertex), "spectral_side": self.spectral_side,
                "line_tree_side": self.line_tree_side, "agree": self.agree, "reason": self.reason,
                "verdict": self.verdict.to_json(),
                "line_tree": self.line_tree.to_json() if self.line_tree else None}


def check_modified_adjacency(g: PlainGraph, v_star, line_tree: LineTree | None = None,
                   structure: BlockStructure | None = None) -> ModifiedAdjacencyReport:
    """lambda_min(A-hat) > -2 versus 'line graph of a tree with v* an end edge'.

    ``line_tree``/``structure`` may be passed in to reuse work across marked vertices.
    """
    if not g.is_connected():
        raise GraphError("graph must be connected")
    ahat = hat_adjacency(g, v_star)
    verdict = classify_lambda_min(ahat, 2)
    h = pendant_fat_hoffman(g, v_star)
    b = b_matrix(h)
    if b != ahat.shifted(-1):
        raise AssertionError("B(h) != A-hat - I")
    reason = None
    lt = line_tree
    if lt is None:
        try:
            lt = line_tree_reconstruct(g)
        except PreconditionError as exc:
            reason = str(exc)
    if lt is not None:
        bs = structure or blocks_and_cut_vertices(g)
        end = lt.is_end_edge(v_star)
        right = end and v_star not in bs.cut_vertices
        if not end:
            reason = "v* corresponds to an internal tree edge"
    else:
        right = False
    return ModifiedAdjacencyReport(v_star, verdict.relation is Relation.GREATER, right, verdict, lt, reason)


def nonuniqueness_pair() -> tuple[HoffmanGraph, HoffmanGraph]:
    """Two non-isomorphic realisations of the (+)(+)-path with v* at an end."""
    h1 = hoffman_graph(
        ["v*", "v1", "v2"], ["f+", "f-", "f1", "f2"],
        [("v*", "v1"), ("v1", "v2"), ("v*", "f+"), ("v*", "f-"), ("v1", "f1"), ("v2", "f2")],
    )
    h2 = hoffman_graph(
        ["v*", "v1", "v2"], ["f0", "f1", "f2"],
        [("v*", "v1"), ("v*", "v2"), ("v1", "v2"), ("v*", "f0"), ("v*", "f2"), ("v1", "f1"), ("v2", "f2")],
    )
    return h1, h2
