import networkx as nx
import pytest

from hoffkit import enumeration as en
from hoffkit.canon import canonical_form
from hoffkit.characterization import TheoremReport, check_theorem_conditions, nonuniqueness_pair
from hoffkit.analysis import Check
from hoffkit.graphs import k1t

from conftest import hoffman_isomorphic, naive_hoffman_classes, signed


def test_single_slim_vertex():
    got = list(en.enumerate_hoffman(en.EnumerationBounds(1, 3, filters={"fat"})))
    assert [canonical_form(h) for h in got] == sorted(canonical_form(k1t(t)) for t in (1, 2, 3))


def test_max_slim_zero_is_empty():
    assert list(en.enumerate_hoffman(en.EnumerationBounds(0, 0))) == []


@pytest.mark.parametrize("max_slim,max_fat", [(1, 2), (2, 1), (2, 2), (2, 3), (3, 1)])
def test_counts_match_naive_generator(max_slim, max_fat):
    ours = list(en.enumerate_hoffman(en.EnumerationBounds(max_slim, max_fat, filters={"fat"})))
    naive = naive_hoffman_classes(max_slim, max_fat)
    assert len(ours) == len(naive)
    for h in naive:
        assert sum(hoffman_isomorphic(h, g) for g in ours) == 1


def test_deterministic_order():
    b = en.EnumerationBounds(3, 2, filters={"fat"})
    a = [canonical_form(h) for h in en.enumerate_hoffman(b)]
    assert a == sorted(a) == [canonical_form(h) for h in en.enumerate_hoffman(b)]


def test_filters_applied():
    for h in en.enumerate_hoffman(en.EnumerationBounds(3, 3, filters=en.FILTERS)):
        assert en.k12_candidates(h) or any(len(f) >= 2 for f in h.fat_map().values())
        assert en.is_indecomposable_by_definition(h) and en.is_fat(h)


def test_cost_ceiling(monkeypatch):
    with pytest.raises(en.CostCeilingError):
        en.EnumerationBounds(9, 1)
    monkeypatch.setenv("HOFFKIT_MAX_SLIM", "2")
    with pytest.raises(en.CostCeilingError):
        en.EnumerationBounds(3, 1)


def test_bad_bounds():
    with pytest.raises(ValueError):
        en.EnumerationBounds(-1, 1)
    with pytest.raises(ValueError):
        en.EnumerationBounds(1, 1, filters={"bogus"})


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_graph_counts(n, count):
    assert len(en.connected_graphs(n)) == count


def test_connected_graphs_against_atlas():
    atlas = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)]
    for n in range(1, 7):
        assert len(en.connected_graphs(n)) == sum(1 for g in atlas if g.number_of_nodes() == n)


@pytest.mark.parametrize("k", range(1, 10))
def test_tree_counts(k):
    assert len(en.trees(k)) == sum(1 for _ in nx.nonisomorphic_trees(k + 1))


def test_oracle_small():
    assert en.oracle_theorem_equivalence(en.EnumerationBounds(3, 3, filters=en.FILTERS)) == []


def test_oracle_requires_filters():
    with pytest.raises(ValueError):
        en.oracle_theorem_equivalence(en.EnumerationBounds(2, 2, filters={"fat"}))


def _broken_checker(h, v):
    r = check_theorem_conditions(h, v)
    conditions = dict(r.conditions, ii=Check(True))
    return TheoremReport(r.marked_vertex, conditions, r.spectral_verdict, r.blocks)


def test_oracle_detects_broken_condition():
    found = en.oracle_theorem_equivalence(en.EnumerationBounds(3, 4, filters=en.FILTERS), checker=_broken_checker)
    assert found


def test_roundtrip_small():
    assert en.roundtrip_signed(4) == []


def test_admissible_signed_graphs_include_known_cases():
    from hoffkit.canon import signed_canonical_form
    forms = {signed_canonical_form(s, marked=v) for s, v in en.admissible_signed_graphs(3)}
    path = signed([0, 1, 2], plus=[(0, 1), (1, 2)])
    tstar = signed([0, 1, 2], plus=[(1, 2)], minus=[(0, 1), (0, 2)])
    assert signed_canonical_form(path, marked=0) in forms
    assert signed_canonical_form(tstar, marked=0) in forms
    assert signed_canonical_form(path, marked=1) not in forms


def test_nonuniqueness():
    rep = en.nonuniqueness_demo()
    assert rep.ok and rep.fat_counts == (4, 3)


def test_audits_clean_on_small_graphs():
    for h in en.enumerate_hoffman(en.EnumerationBounds(3, 3, filters={"fat"})):
        assert en.audit_monotonicity(h) == []
        assert en.audit_decomposition(h) == []


def test_audit_detects_decomposable_pairs():
    h1, _ = nonuniqueness_pair()
    assert en.audit_monotonicity(h1) == []


def test_tree_end_edges_small():
    assert en.tree_end_edge_sweep(5) == []


def test_modified_adjacency_small():
    assert en.modified_adjacency_sweep(5) == []
