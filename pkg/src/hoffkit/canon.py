"""Canonical labelling of small vertex-coloured graphs with coloured edges.

The graph is given as a list of integer vertex colours and a symmetric
integer matrix (0 = no edge).  Colour refinement produces an ordered
equitable partition; remaining ties are broken by individualising each
vertex of the first non-singleton cell and recursing.  Vertices of that cell
that are twins of each other (swapping them is an automorphism) are explored
only once.  The lexicographically largest leaf encoding wins.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import EdgeSignedGraph, GraphError, HoffmanGraph, PlainGraph

DEFAULT_SIZE_BOUND = 16


class CanonicalFormError(GraphError):
    pass


def _refine(cells: list[list[int]], mat: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(mat)
    while True:
        where = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new_cells: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = mat[v]
                sig = tuple(sorted((where[w], row[w]) for w in range(n) if row[w] and w != v))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _twin_reps(cell: list[int], mat) -> list[int]:
    n = len(mat)
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if all(mat[v][w] == mat[r][w] for w in range(n) if w != v and w != r):
                break
        else:
            reps.append(v)
    return reps


def _encode(order: list[int], colors, mat) -> tuple:
    cols = tuple(colors[v] for v in order)
    entries = tuple(mat[order[i]][order[j]] for i in range(len(order)) for j in range(i, len(order)))
    return cols + (-1,) + entries


def canonical_labeling(colors: Sequence[int], mat: Sequence[Sequence[int]]) -> tuple[list[int], tuple]:
    """Return ``(order, code)``: vertices in canonical order and the invariant code.

    Two inputs get the same code iff there is a colour- and entry-preserving
    bijection between them.
    """
    n = len(colors)
    diag_colors = [(colors[v], mat[v][v]) for v in range(n)]
    keys = sorted(set(diag_colors))
    cells = [[v for v in range(n) if diag_colors[v] == k] for k in keys]
    cells = [c for c in cells if c]
    best: list = [None, None]

    def search(cells):
        cells = _refine(cells, mat)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _encode(order, colors, mat)
            if best[1] is None or code > best[1]:
                best[0], best[1] = order, code
            return
        cell = cells[target]
        for v in _twin_reps(cell, mat):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n:
        search(cells)
    else:
        best = [[], ()]
    return best[0], best[1]


def _pack(tag: bytes, code: tuple) -> bytes:
    return tag + b":" + ",".join(map(str, code)).encode()


def hoffman_matrix(h: HoffmanGraph) -> tuple[list[int], list[list[int]], list]:
    verts = list(h.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mat = [[0] * n for _ in range(n)]
    for e in h.edges:
        a, b = (idx[x] for x in e)
        mat[a][b] = mat[b][a] = 1
    colors = [0] * len(h.slim) + [1] * len(h.fat)
    return colors, mat, verts


def hoffman_canonical_order(h: HoffmanGraph, bound: int = DEFAULT_SIZE_BOUND) -> list:
    if len(h.vertices) > bound:
        raise CanonicalFormError(f"canonical form: {len(h.vertices)} vertices exceeds bound {bound}")
    colors, mat, verts = hoffman_matrix(h)
    order, _ = canonical_labeling(colors, mat)
    return [verts[i] for i in order]


def canonical_form(h: HoffmanGraph, bound: int = DEFAULT_SIZE_BOUND) -> bytes:
    """Byte string that is equal for two Hoffman graphs iff they are isomorphic."""
    if len(h.vertices) > bound:
        raise CanonicalFormError(f"canonical form: {len(h.vertices)} vertices exceeds bound {bound}")
    colors, mat, _ = hoffman_matrix(h)
    return _pack(b"H", canonical_labeling(colors, mat)[1])


def plain_canonical_form(g: PlainGraph, bound: int = DEFAULT_SIZE_BOUND, marked=None) -> bytes:
    if len(g.vertices) > bound:
        raise CanonicalFormError(f"canonical form: {len(g.vertices)} vertices exceeds bound {bound}")
    verts = list(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    mat = [[0] * len(verts) for _ in verts]
    for e in g.edges:
        a, b = (idx[x] for x in e)
        mat[a][b] = mat[b][a] = 1
    colors = [1 if v == marked else 0 for v in verts]
    return _pack(b"G", canonical_labeling(colors, mat)[1])


def signed_canonical_form(s: EdgeSignedGraph, marked=None, bound: int = DEFAULT_SIZE_BOUND) -> bytes:
    if len(s.vertices) > bound:
        raise CanonicalFormError(f"canonical form: {len(s.vertices)} vertices exceeds bound {bound}")
    verts = list(s.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    mat = [[0] * len(verts) for _ in verts]
    for edges, val in ((s.plus_edges, 1), (s.minus_edges, 2)):
        for e in edges:
            a, b = (idx[x] for x in e)
            mat[a][b] = mat[b][a] = val
    colors = [1 if v == marked else 0 for v in verts]
    return _pack(b"S", canonical_labeling(colors, mat)[1])
