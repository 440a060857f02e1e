import math

import pytest

from hoffkit.analysis import special_graph, verify_reduced_representation
from hoffkit.canon import canonical_form
from hoffkit.characterization import (
    build_psi,
    check_modified_adjacency,
    check_theorem_conditions,
    construct_hoffman_from_signed,
    hat_adjacency,
    k12_candidates,
    signed_admissibility,
)
from hoffkit.graphs import hoffman_graph, k1t
from hoffkit.spectral import Relation, b_matrix, classify_lambda_min, lambda_min_approx, matrix
from hoffkit.structure import PreconditionError

from conftest import cycle, hoffman_isomorphic, plain, signed

AT_MOST = {Relation.EQUAL, Relation.LESS}
PATH = signed(["v*", "v1", "v2"], plus=[("v*", "v1"), ("v1", "v2")])
TSTAR = signed(["v*", "v1", "v2"], plus=[("v1", "v2")], minus=[("v*", "v1"), ("v*", "v2")])


def test_h1_satisfies_everything(h1):
    r = check_theorem_conditions(h1, "v*")
    assert r.all_conditions and r.spectral_verdict.relation is Relation.GREATER and r.equivalence_holds


def test_path_with_two_double_fat_ends():
    h = hoffman_graph(["a", "b", "c"], ["a1", "a2", "b1", "c1", "c2"],
                      [("a", "b"), ("b", "c"), ("a", "a1"), ("a", "a2"), ("b", "b1"), ("c", "c1"), ("c", "c2")])
    r = check_theorem_conditions(h, "a")
    assert not r.conditions["ii"].ok
    assert r.spectral_verdict.relation in AT_MOST
    assert r.equivalence_holds


def test_special_graph_with_hole():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, "f0"), (0, "g0")] + [(i, f"f{i}") for i in (1, 2, 3)]
    h = hoffman_graph([0, 1, 2, 3], ["f0", "g0", "f1", "f2", "f3"], edges)
    r = check_theorem_conditions(h, 0)
    assert not r.conditions["i"].ok and r.conditions["i"].witness[0] == "C4"
    assert r.spectral_verdict.relation in AT_MOST


def test_preconditions(h1):
    with pytest.raises(PreconditionError):
        check_theorem_conditions(h1, "v1")  # only one fat neighbour
    with pytest.raises(PreconditionError):
        check_theorem_conditions(h1, "f1")
    assert k12_candidates(h1) == ["v*"]


def test_psi_h1(h1):
    psi = build_psi(h1, "v*")
    assert psi.norm == 3 and psi.dimension == 3
    assert psi.is_linearly_independent()
    assert all(x.denominator == 1 for v in psi.vectors.values() for x in v)
    gram = psi.gram(h1.slim)
    b = b_matrix(h1)
    assert all(gram[i][j] == b[i, j] + 3 * (i == j) for i in range(3) for j in range(3))


def test_psi_k12():
    psi = build_psi(k1t(2), "v")
    assert psi.vectors == {"v": (1,)}
    assert psi.gram(["v"]) == [[1]]


def test_psi_rejected_when_conditions_fail():
    h = hoffman_graph(["a", "b", "c"], ["a1", "a2", "b1", "c1", "c2"],
                      [("a", "b"), ("b", "c"), ("a", "a1"), ("a", "a2"), ("b", "b1"), ("c", "c1"), ("c", "c2")])
    with pytest.raises(PreconditionError):
        build_psi(h, "a")


@pytest.mark.parametrize("s,v", [(PATH, "v*"), (TSTAR, "v*"), (signed(["v*"]), "v*")])
def test_admissible(s, v):
    assert signed_admissibility(s, v).admissible


def test_not_admissible_two_minus_edges():
    s = signed(["v*", "a", "b", "c"], plus=[("v*", "a")], minus=[("a", "b"), ("b", "c")])
    rep = signed_admissibility(s, "v*")
    assert not rep.conditions["ii"].ok and rep.conditions["ii"].witness == ["b"]


def test_not_admissible_cut_vertex():
    rep = signed_admissibility(PATH, "v1")
    assert not rep.conditions["iii"].ok


def test_construct_path_gives_h1(h1):
    h = construct_hoffman_from_signed(PATH, "v*")
    assert hoffman_isomorphic(h, h1)
    assert canonical_form(h) == canonical_form(h1)


def test_construct_single_vertex_gives_k12():
    assert canonical_form(construct_hoffman_from_signed(signed(["v*"]), "v*")) == canonical_form(k1t(2))


def test_construct_tstar():
    h = construct_hoffman_from_signed(TSTAR, "v*")
    want = hoffman_graph(["v*", "v1", "v2"], ["f1", "f2"],
                         [("v1", "v2"), ("v*", "f1"), ("v1", "f1"), ("v*", "f2"), ("v2", "f2")])
    assert hoffman_isomorphic(h, want)
    assert special_graph(h).same_as(TSTAR)
    assert classify_lambda_min(b_matrix(h), 3).relation is Relation.GREATER


def test_construct_rejects_inadmissible():
    with pytest.raises(PreconditionError):
        construct_hoffman_from_signed(PATH, "v1")


def test_hat_adjacency_examples():
    assert hat_adjacency(plain("ab", ["ab"]), "a") == matrix([[-1, 1], [1, 0]])
    assert hat_adjacency(plain("abc", ["ab", "bc", "ac"]), "a") == matrix([[-1, 1, 1], [1, 0, 1], [1, 1, 0]])
    c4 = hat_adjacency(cycle(4), 0)
    assert c4 == matrix([[-1, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])


@pytest.mark.parametrize("v", ["a", "b"])
def test_modified_adjacency_single_edge(v):
    g = plain("ab", ["ab"])
    r = check_modified_adjacency(g, v)
    assert r.spectral_side and r.line_tree_side
    val, _ = lambda_min_approx(hat_adjacency(g, v))
    assert abs(val - (-1 - math.sqrt(5)) / 2) < 1e-10


@pytest.mark.parametrize("v", "abc")
def test_modified_adjacency_triangle(v):
    r = check_modified_adjacency(plain("abc", ["ab", "bc", "ac"]), v)
    assert r.spectral_side and r.line_tree_side and r.agree


@pytest.mark.parametrize("v", range(4))
def test_modified_adjacency_c4(v):
    r = check_modified_adjacency(cycle(4), v)
    assert not r.spectral_side and not r.line_tree_side and r.agree


def test_modified_adjacency_internal_edge():
    # path on 3 vertices is L(P4); the middle vertex is the internal edge
    r = check_modified_adjacency(plain("abc", ["ab", "bc"]), "b")
    assert not r.spectral_side and not r.line_tree_side


def test_reduced_representation_matches_every_construction():
    from hoffkit.enumeration import admissible_signed_graphs
    for s, v in admissible_signed_graphs(4):
        h = construct_hoffman_from_signed(s, v)
        psi = build_psi(h, v)
        assert verify_reduced_representation(h, psi) and psi.is_linearly_independent()
