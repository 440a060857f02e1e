"""Reading and writing the JSON file formats."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .analysis import Decomposition, ReducedRepresentation
from .graphs import EdgeSignedGraph, GraphError, HoffmanGraph, PlainGraph, hoffman_graph
from .spectral import MatrixError, RationalSymmetricMatrix


class InputError(ValueError):
    """A file could not be parsed or does not describe a valid object."""


def _load(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _require(data, key: str, source: str, kind=list):
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    if key not in data:
        raise InputError(f"{source}: missing key {key!r}")
    if not isinstance(data[key], kind):
        raise InputError(f"{source}: {key!r} must be a {kind.__name__}")
    return data[key]


def _edges(data, key: str, source: str) -> list[tuple]:
    out = []
    for i, e in enumerate(_require(data, key, source)):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"{source}: {key}[{i}] must be a pair of vertex ids")
        out.append(tuple(e))
    return out


def _vertex_list(data, key: str, source: str) -> list:
    vs = _require(data, key, source)
    for i, v in enumerate(vs):
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise InputError(f"{source}: {key}[{i}] must be a string or integer vertex id")
    return vs


def hoffman_from_json(data, source: str = "<input>") -> HoffmanGraph:
    slim = _vertex_list(data, "slim", source)
    fat = _vertex_list(data, "fat", source)
    edges = _edges(data, "edges", source)
    try:
        return hoffman_graph(slim, fat, edges)
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def hoffman_to_json(h: HoffmanGraph) -> dict:
    order = {v: i for i, v in enumerate(h.vertices)}
    edges = sorted((sorted(e, key=order.__getitem__) for e in h.edges),
                   key=lambda e: (order[e[0]], order[e[1]]))
    return {"slim": list(h.slim), "fat": list(h.fat), "edges": [list(e) for e in edges]}


def signed_from_json(data, source: str = "<input>") -> EdgeSignedGraph:
    vertices = _vertex_list(data, "vertices", source)
    try:
        return EdgeSignedGraph(tuple(vertices), _edges(data, "plus", source), _edges(data, "minus", source))
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def _sorted_edges(edges, order) -> list:
    es = [sorted(e, key=order.__getitem__) for e in edges]
    return sorted(es, key=lambda e: (order[e[0]], order[e[1]]))


def signed_to_json(s: EdgeSignedGraph) -> dict:
    order = {v: i for i, v in enumerate(s.vertices)}
    return {"vertices": list(s.vertices), "plus": _sorted_edges(s.plus_edges, order),
            "minus": _sorted_edges(s.minus_edges, order)}


def plain_from_json(data, source: str = "<input>") -> PlainGraph:
    vertices = _vertex_list(data, "vertices", source)
    try:
        return PlainGraph(tuple(vertices), _edges(data, "edges", source))
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def plain_to_json(g: PlainGraph) -> dict:
    order = {v: i for i, v in enumerate(g.vertices)}
    return {"vertices": list(g.vertices), "edges": _sorted_edges(g.edges, order)}


def matrix_from_json(data, source: str = "<input>") -> RationalSymmetricMatrix:
    rows = _require(data, "rows", source)
    for i, r in enumerate(rows):
        if not isinstance(r, list):
            raise InputError(f"{source}: rows[{i}] must be a list")
    try:
        return RationalSymmetricMatrix.from_json(data)
    except (MatrixError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{source}: {exc}") from None


def decomposition_from_json(data, source: str = "<input>") -> Decomposition:
    parts = _require(data, "parts", source)
    for i, p in enumerate(parts):
        if not isinstance(p, list):
            raise InputError(f"{source}: parts[{i}] must be a list of vertex ids")
    return Decomposition(tuple(frozenset(p) for p in parts))


def representation_from_json(data, source: str = "<input>") -> ReducedRepresentation:
    vectors = _require(data, "vectors", source, dict)
    for key in ("m", "N"):
        value = _require(data, key, source, int)
        if value <= 0:
            raise InputError(f"{source}: {key!r} must be positive")
    try:
        return ReducedRepresentation(data["m"], data["N"], {
            k: [Fraction(str(x)) for x in v] for k, v in vectors.items()})
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{source}: bad vector entry ({exc})") from None


def read_json(path) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return _load(text, str(path))


def read_hoffman(path) -> HoffmanGraph:
    return hoffman_from_json(read_json(path), str(path))


def read_signed(path) -> EdgeSignedGraph:
    return signed_from_json(read_json(path), str(path))


def read_plain(path) -> PlainGraph:
    return plain_from_json(read_json(path), str(path))


def read_matrix(path) -> RationalSymmetricMatrix:
    return matrix_from_json(read_json(path), str(path))


def parse_text(text: str, kind: str, source: str = "<input>"):
    data = _load(text, source)
    return {"hoffman": hoffman_from_json, "signed": signed_from_json,
            "plain": plain_from_json, "matrix": matrix_from_json,
            "decomposition": decomposition_from_json, "representation": representation_from_json}[kind](data, source)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
