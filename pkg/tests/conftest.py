from itertools import combinations, product

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match

from hoffkit.characterization import nonuniqueness_pair
from hoffkit.graphs import EdgeSignedGraph, PlainGraph, hoffman_graph, is_fat


@pytest.fixture
def h1():
    return nonuniqueness_pair()[0]


@pytest.fixture
def h2():
    return nonuniqueness_pair()[1]


def plain(vertices, edges):
    return PlainGraph(tuple(vertices), [tuple(e) for e in edges])


def signed(vertices, plus=(), minus=()):
    return EdgeSignedGraph(tuple(vertices), [tuple(e) for e in plus], [tuple(e) for e in minus])


def cycle(n):
    return plain(range(n), [(i, (i + 1) % n) for i in range(n)])


def to_nx_hoffman(h):
    g = nx.Graph()
    g.add_nodes_from(h.slim, fat=False)
    g.add_nodes_from(h.fat, fat=True)
    g.add_edges_from(tuple(e) for e in h.edges)
    return g


def to_nx_signed(s, marked=None):
    g = nx.Graph()
    g.add_nodes_from(s.vertices, mark=False)
    if marked is not None:
        g.nodes[marked]["mark"] = True
    g.add_edges_from((tuple(e) for e in s.plus_edges), sign=1)
    g.add_edges_from((tuple(e) for e in s.minus_edges), sign=-1)
    return g


def hoffman_isomorphic(a, b) -> bool:
    return nx.is_isomorphic(to_nx_hoffman(a), to_nx_hoffman(b), node_match=categorical_node_match("fat", False))


def signed_isomorphic(a, b, ma=None, mb=None) -> bool:
    return nx.is_isomorphic(to_nx_signed(a, ma), to_nx_signed(b, mb),
                            node_match=categorical_node_match("mark", False),
                            edge_match=categorical_edge_match("sign", 0))


def naive_hoffman_classes(max_slim, max_fat, fat_filter=True):
    """Every labelled Hoffman graph, deduplicated by pairwise isomorphism tests."""
    classes = []
    for s in range(1, max_slim + 1):
        for nf in range(max_fat + 1):
            slim = [f"s{i}" for i in range(s)]
            fats = [f"f{j}" for j in range(nf)]
            pairs = list(combinations(slim, 2)) + [(v, f) for v in slim for f in fats]
            for pattern in product((0, 1), repeat=len(pairs)):
                edges = [p for p, on in zip(pairs, pattern) if on]
                if any(not any(f in e for e in edges) for f in fats):
                    continue
                h = hoffman_graph(slim, fats, edges)
                if fat_filter and not is_fat(h):
                    continue
                if not any(hoffman_isomorphic(h, other) for other in classes):
                    classes.append(h)
    return classes
