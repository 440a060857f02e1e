import random

import pytest

from hoffkit.canon import CanonicalFormError, canonical_form, plain_canonical_form, signed_canonical_form
from hoffkit.graphs import hoffman_graph, k1t

from conftest import cycle, hoffman_isomorphic, plain, signed


def test_fat_relabel_invariant():
    assert canonical_form(k1t(2)) == canonical_form(k1t(2).relabel({"f1": "f2", "f2": "f1"}))


def test_distinguishes_k12_and_k11():
    assert canonical_form(k1t(2)) != canonical_form(k1t(1))


def test_h1_h2_distinct(h1, h2):
    assert canonical_form(h1) != canonical_form(h2)


def test_size_bound():
    with pytest.raises(CanonicalFormError):
        canonical_form(k1t(20))


def _random_hoffman(rng, n_slim, n_fat):
    slim = [f"s{i}" for i in range(n_slim)]
    fat = [f"f{j}" for j in range(n_fat)]
    edges = [(a, b) for i, a in enumerate(slim) for b in slim[i + 1:] if rng.random() < 0.5]
    for f in fat:
        nb = [v for v in slim if rng.random() < 0.4] or [rng.choice(slim)]
        edges += [(v, f) for v in nb]
    return hoffman_graph(slim, fat, edges)


@pytest.mark.parametrize("seed", range(40))
def test_invariant_under_random_relabelling(seed):
    rng = random.Random(seed)
    h = _random_hoffman(rng, rng.randint(1, 6), rng.randint(0, 5))
    names = list(h.vertices)
    perm = names[:]
    rng.shuffle(perm)
    g = h.relabel({a: f"x{b}" for a, b in zip(names, perm)})
    # shuffle declaration order too
    g = hoffman_graph(rng.sample(g.slim, len(g.slim)), rng.sample(g.fat, len(g.fat)), g.edges)
    assert canonical_form(h) == canonical_form(g)


@pytest.mark.parametrize("seed", range(60))
def test_equal_forms_iff_isomorphic(seed):
    rng = random.Random(1000 + seed)
    a = _random_hoffman(rng, 4, 2)
    b = _random_hoffman(rng, 4, 2)
    assert (canonical_form(a) == canonical_form(b)) == hoffman_isomorphic(a, b)


def test_plain_forms():
    assert plain_canonical_form(cycle(4)) == plain_canonical_form(plain("abcd", ["ac", "cb", "bd", "da"]))
    assert plain_canonical_form(cycle(4)) != plain_canonical_form(plain("abcd", ["ab", "bc", "cd"]))


def test_signed_forms_respect_sign_and_mark():
    p = signed("abc", plus=["ab"], minus=["bc"])
    q = signed("abc", plus=["bc"], minus=["ab"])
    assert signed_canonical_form(p) == signed_canonical_form(q)
    assert signed_canonical_form(p, marked="a") != signed_canonical_form(q, marked="a")
    assert signed_canonical_form(p, marked="a") == signed_canonical_form(q, marked="c")
