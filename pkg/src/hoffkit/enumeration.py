"""Exhaustive small-scale generation and the cross-checks built on it."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterator

from .analysis import (
    decompose_by_special_components,
    is_indecomposable_by_definition,
    special_graph,
    verify_reduced_representation,
)
from .canon import canonical_form, plain_canonical_form, signed_canonical_form
from .characterization import (
    TheoremReport,
    build_psi,
    check_modified_adjacency,
    check_theorem_conditions,
    construct_hoffman_from_signed,
    hat_adjacency,
    k12_candidates,
    nonuniqueness_pair,
    signed_admissibility,
)
from .graphs import EdgeSignedGraph, HoffmanGraph, PlainGraph, hoffman_graph, is_fat
from .spectral import Relation, b_matrix, classify_lambda_min
from .structure import PreconditionError, blocks_and_cut_vertices, line_graph, line_tree_reconstruct

FILTERS = frozenset({"fat", "indecomposable", "contains_K12"})


class CostCeilingError(ValueError):
    pass


def cost_ceiling() -> tuple[int, int]:
    """(max slim, max fat) allowed; override with HOFFKIT_MAX_SLIM / HOFFKIT_MAX_FAT."""
    return int(os.environ.get("HOFFKIT_MAX_SLIM", 4)), int(os.environ.get("HOFFKIT_MAX_FAT", 5))


@dataclass(frozen=True)
class EnumerationBounds:
    max_slim: int
    max_fat: int
    max_fat_degree: int = 3
    filters: frozenset = frozenset()
    max_multiplicity: int = 3

    def __post_init__(self):
        object.__setattr__(self, "filters", frozenset(self.filters))
        unknown = self.filters - FILTERS
        if unknown:
            raise ValueError(f"unknown filters {sorted(unknown)}")
        if min(self.max_slim, self.max_fat, self.max_fat_degree, self.max_multiplicity) < 0:
            raise ValueError("bounds must be non-negative")
        slim_cap, fat_cap = cost_ceiling()
        if self.max_slim > slim_cap or self.max_fat > fat_cap:
            raise CostCeilingError(
                f"bounds ({self.max_slim}, {self.max_fat}) exceed the cost ceiling ({slim_cap}, {fat_cap})")


# -- plain graphs -----------------------------------------------------------------

def _graph_from_edges(n: int, edges) -> PlainGraph:
    return PlainGraph(tuple(range(n)), frozenset(frozenset(e) for e in edges))


def all_graphs(n: int) -> list[PlainGraph]:
    """One graph per isomorphism class on vertices 0..n-1, by vertex augmentation."""
    if n == 0:
        return [PlainGraph(())]
    reps: dict[bytes, PlainGraph] = {}
    for g in all_graphs(n - 1):
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                h = _graph_from_edges(n, list(map(tuple, g.edges)) + [(v, n - 1) for v in nbrs])
                reps.setdefault(plain_canonical_form(h), h)
    return [reps[k] for k in sorted(reps)]


_CONNECTED_CACHE: dict[int, list[PlainGraph]] = {}


def connected_graphs(n: int) -> list[PlainGraph]:
    """Connected graphs on n vertices up to isomorphism.

    Every connected graph has a non-cut vertex, so it arises from a connected
    graph on n-1 vertices by adding a vertex with a non-empty neighbourhood.
    """
    if n in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[n]
    if n <= 1:
        out = [PlainGraph(tuple(range(n)))]
    else:
        reps: dict[bytes, PlainGraph] = {}
        for g in connected_graphs(n - 1):
            base = list(map(tuple, g.edges))
            for k in range(1, n):
                for nbrs in combinations(range(n - 1), k):
                    h = _graph_from_edges(n, base + [(v, n - 1) for v in nbrs])
                    reps.setdefault(plain_canonical_form(h), h)
        out = [reps[k] for k in sorted(reps)]
    _CONNECTED_CACHE[n] = out
    return out


def trees(n_edges: int) -> list[PlainGraph]:
    """Trees with ``n_edges`` edges up to isomorphism, by leaf addition."""
    if n_edges == 0:
        return [PlainGraph((0,))]
    reps: dict[bytes, PlainGraph] = {}
    for t in trees(n_edges - 1):
        n = len(t.vertices)
        for v in range(n):
            h = _graph_from_edges(n + 1, list(map(tuple, t.edges)) + [(v, n)])
            reps.setdefault(plain_canonical_form(h), h)
    return [reps[k] for k in sorted(reps)]


# -- Hoffman graphs ---------------------------------------------------------------

def _passes(h: HoffmanGraph, filters) -> bool:
    if "fat" in filters and not is_fat(h):
        return False
    if "contains_K12" in filters and not any(len(fs) >= 2 for fs in h.fat_map().values()):
        return False
    if "indecomposable" in filters and not is_indecomposable_by_definition(h):
        return False
    return True


def enumerate_hoffman(b: EnumerationBounds) -> Iterator[HoffmanGraph]:
    """One representative per isomorphism class, in canonical-form order.

    Fat vertices are generated as a multiset of non-empty slim neighbourhoods
    (each neighbourhood at most ``max_multiplicity`` times); slim vertices have
    at most ``max_fat_degree`` fat neighbours.
    """
    reps: dict[bytes, HoffmanGraph] = {}
    for s in range(1, b.max_slim + 1):
        slim = [f"s{i}" for i in range(s)]
        subsets = [frozenset(c) for k in range(1, s + 1) for c in combinations(range(s), k)]
        for skel in all_graphs(s):
            skel_edges = [(slim[a], slim[c]) for a, c in map(tuple, skel.edges)]
            for nf in range(0, b.max_fat + 1):
                for combo in combinations_with_replacement(range(len(subsets)), nf):
                    if any(combo.count(i) > b.max_multiplicity for i in set(combo)):
                        continue
                    deg = [0] * s
                    for i in combo:
                        for v in subsets[i]:
                            deg[v] += 1
                    if max(deg) > b.max_fat_degree:
                        continue
                    if "fat" in b.filters and min(deg) == 0:
                        continue
                    if "contains_K12" in b.filters and max(deg) < 2:
                        continue
                    fats = [f"f{j}" for j in range(nf)]
                    edges = skel_edges + [(slim[v], fats[j]) for j, i in enumerate(combo) for v in subsets[i]]
                    h = hoffman_graph(slim, fats, edges)
                    if not _passes(h, b.filters):
                        continue
                    reps.setdefault(canonical_form(h), h)
    for key in sorted(reps):
        yield reps[key]


# -- oracles ----------------------------------------------------------------------

@dataclass
class Counterexample:
    graph: HoffmanGraph
    report: TheoremReport | None
    reason: str


def oracle_theorem_equivalence(b: EnumerationBounds,
                               checker: Callable[[HoffmanGraph, object], TheoremReport] = check_theorem_conditions,
                               graphs=None) -> list[Counterexample]:
    if b.filters != FILTERS:
        raise ValueError("the theorem oracle needs filters {fat, indecomposable, contains_K12}")
    out = []
    for h in (graphs if graphs is not None else enumerate_hoffman(b)):
        for v in k12_candidates(h):
            report = checker(h, v)
            if not report.equivalence_holds:
                out.append(Counterexample(h, report, "spectral verdict and conditions disagree"))
                continue
            if report.all_conditions:
                try:
                    psi = build_psi(h, v)
                except PreconditionError as exc:
                    out.append(Counterexample(h, report, f"psi construction rejected: {exc}"))
                    continue
                if not verify_reduced_representation(h, psi) or not psi.is_linearly_independent(h.slim):
                    out.append(Counterexample(h, report, "psi is not an independent norm-3 representation"))
    return out


def _monotone(big: Relation, small: Relation) -> bool:
    """lambda_min(sub) >= lambda_min(whole) seen through verdicts at one threshold."""
    return small >= big


def audit_monotonicity(h: HoffmanGraph, thresholds=(2, 3, 4)) -> list[str]:
    problems = []
    b = b_matrix(h)
    whole = {t: classify_lambda_min(b, t).relation for t in thresholds}
    n = len(h.slim)
    fats = h.fat_map()
    for k in range(1, n):
        for keep in combinations(range(n), k):
            verts = {h.slim[i] for i in keep}
            sub = h.induced(verts | set().union(*(fats[v] for v in verts)))
            bs = b_matrix(sub)
            for t in thresholds:
                if not _monotone(whole[t], classify_lambda_min(bs, t).relation):
                    problems.append(f"slim subset {sorted(verts)} violates interlacing at -{t}")
    for f in h.fat:
        sub = h.induced(set(h.vertices) - {f})
        if not sub.slim:
            continue
        for t in thresholds:
            if not _monotone(whole[t], classify_lambda_min(b_matrix(sub), t).relation):
                problems.append(f"deleting fat {f} violates interlacing at -{t}")
    return problems


def audit_decomposition(h: HoffmanGraph, thresholds=(2, 3, 4)) -> list[str]:
    d = decompose_by_special_components(h)
    if len(d.parts) == 1:
        return []
    problems = []
    b = b_matrix(h)
    for t in thresholds:
        whole = classify_lambda_min(b, t).relation
        parts = min(classify_lambda_min(b_matrix(h.induced(p)), t).relation for p in d.parts)
        if whole != parts:
            problems.append(f"min rule fails at -{t}: whole {whole}, parts {parts}")
    return problems


# -- signed graphs ----------------------------------------------------------------

def admissible_signed_graphs(max_vertices: int) -> list[tuple[EdgeSignedGraph, object]]:
    """Admissible marked signed graphs (marked vertex ``0``) up to marked isomorphism."""
    reps: dict[bytes, EdgeSignedGraph] = {}
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        structural: dict[frozenset, bool] = {}
        for pattern in product((0, 1, -1), repeat=len(pairs)):
            plus = frozenset(frozenset(p) for p, x in zip(pairs, pattern) if x == 1)
            minus = frozenset(frozenset(p) for p, x in zip(pairs, pattern) if x == -1)
            under = plus | minus
            if under not in structural:
                g = PlainGraph(tuple(range(n)), under)
                structural[under] = g.is_connected()
            if not structural[under]:
                continue
            s = EdgeSignedGraph(tuple(range(n)), plus, minus)
            if not signed_admissibility(s, 0).admissible:
                continue
            reps.setdefault(signed_canonical_form(s, marked=0), s)
    return [(reps[k], 0) for k in sorted(reps)]


def roundtrip_signed(max_vertices: int = 5) -> list[str]:
    failures = []
    for s, v in admissible_signed_graphs(max_vertices):
        try:
            h = construct_hoffman_from_signed(s, v)
        except (AssertionError, PreconditionError) as exc:
            failures.append(f"{sorted(map(sorted, s.plus_edges))}/{sorted(map(sorted, s.minus_edges))}: {exc}")
            continue
        if not special_graph(h).same_as(s):
            failures.append("special graph differs")
        elif len(h.fat_neighbors(v)) != 2:
            failures.append("v* fat degree != 2")
        elif classify_lambda_min(b_matrix(h), 3).relation is not Relation.GREATER:
            failures.append(f"verdict not Greater for {s}")
    return failures


# -- the modified adjacency matrix ------------------------------------------------

def modified_adjacency_sweep(max_vertices: int = 8) -> list[str]:
    disagreements = []
    for n in range(1, max_vertices + 1):
        for g in connected_graphs(n):
            try:
                lt = line_tree_reconstruct(g)
            except PreconditionError:
                lt = None
            bs = blocks_and_cut_vertices(g)
            for v in g.vertices:
                r = check_modified_adjacency(g, v, lt, bs)
                if not r.agree:
                    disagreements.append(f"n={n} edges={sorted(map(sorted, g.edges))} v*={v}")
    return disagreements


def tree_end_edge_sweep(max_edges: int = 9) -> list[str]:
    failures = []
    for k in range(1, max_edges + 1):
        for t in trees(k):
            g, edge_of = line_graph(t)
            deg = {v: 0 for v in t.vertices}
            for e in t.edges:
                for x in e:
                    deg[x] += 1
            for v, e in edge_of.items():
                end = any(deg[x] == 1 for x in e)
                rel = classify_lambda_min(hat_adjacency(g, v), 2).relation
                if end != (rel is Relation.GREATER):
                    failures.append(f"tree {sorted(map(sorted, t.edges))} edge {sorted(e)}: end={end} verdict={rel}")
    return failures


# -- non-uniqueness ---------------------------------------------------------------

@dataclass(frozen=True)
class NonuniquenessReport:
    same_special_graph: bool
    non_isomorphic: bool
    both_greater: bool
    fat_counts: tuple

    @property
    def ok(self) -> bool:
        return self.same_special_graph and self.non_isomorphic and self.both_greater

    def to_json(self) -> dict:
        return {"same_special_graph": self.same_special_graph, "non_isomorphic": self.non_isomorphic,
                "both_greater": self.both_greater, "fat_counts": list(self.fat_counts), "ok": self.ok}


def nonuniqueness_demo() -> NonuniquenessReport:
    h1, h2 = nonuniqueness_pair()
    return NonuniquenessReport(
        special_graph(h1).same_as(special_graph(h2)),
        canonical_form(h1) != canonical_form(h2),
        all(classify_lambda_min(b_matrix(h), 3).relation is Relation.GREATER for h in (h1, h2)),
        (len(h1.fat), len(h2.fat)),
    )
