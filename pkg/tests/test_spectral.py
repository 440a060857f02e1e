from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoffkit.graphs import hoffman_graph, k1t
from hoffkit.spectral import (
    ConvergenceError,
    MatrixError,
    RationalSymmetricMatrix,
    Relation,
    b_matrix,
    classify_lambda_min,
    lambda_min_approx,
    matrix,
    sign_switch,
)


def test_b_of_k12():
    assert b_matrix(k1t(2)) == matrix([[-2]])


def test_b_of_triangle_without_fats():
    h = hoffman_graph("abc", [], [("a", "b"), ("b", "c"), ("a", "c")])
    assert b_matrix(h) == matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_b_of_h1(h1):
    b = b_matrix(h1)
    assert b.labels == ("v*", "v1", "v2")
    assert b == matrix([[-2, 1, 0], [1, -1, 1], [0, 1, -1]])


@pytest.mark.parametrize("rows,t,want", [
    ([[-1, 1, 0], [1, -2, 1], [0, 1, -1]], 3, Relation.EQUAL),
    ([[-2]], 3, Relation.GREATER),
    ([[-2, 1, 1], [1, -1, -1], [1, -1, -1]], 3, Relation.LESS),
    ([[0, 0], [0, 0]], 0, Relation.EQUAL),
    ([[0, 1], [1, 0]], 1, Relation.EQUAL),
    ([[0, 1], [1, 0]], "1/2", Relation.LESS),
    ([[0, 1], [1, 0]], "3/2", Relation.GREATER),
    ([["1/2", "1/3"], ["1/3", "1/4"]], 0, Relation.GREATER),
    ([[0, 2, 0], [2, 0, 0], [0, 0, 5]], 2, Relation.EQUAL),
])
def test_classify(rows, t, want):
    v = classify_lambda_min(matrix(rows), t)
    assert v.relation is want
    assert v.validate()


def test_empty_matrix_is_greater():
    assert classify_lambda_min(matrix([]), 3).relation is Relation.GREATER


def test_rejects_floats_and_asymmetry():
    with pytest.raises(MatrixError):
        matrix([[0.5]])
    with pytest.raises(MatrixError):
        matrix([[0, 1], [2, 0]])
    with pytest.raises(MatrixError):
        matrix([[0, 1]])


def test_certificates():
    eq = classify_lambda_min(matrix([[-1, 1, 0], [1, -2, 1], [0, 1, -1]]), 3)
    x = eq.certificate["vector"]
    assert eq.certificate["kind"] == "kernel"
    assert [y / x[0] for y in x] == [1, -2, 1]
    less = classify_lambda_min(matrix([[0, 1], [1, 0]]), 0)
    assert less.certificate["kind"] == "negative-direction"
    assert less.shifted.quadratic(less.certificate["vector"]) < 0


def test_json_roundtrip():
    m = matrix([["1/2", "-3"], ["-3", "0.25"]])
    assert RationalSymmetricMatrix.from_json(m.to_json()) == m
    assert m[1, 1] == Fraction(1, 4)


@pytest.mark.parametrize("rows,want", [
    ([[0, 1], [1, 0]], -1.0),
    ([[-1, 1, 1], [1, -1, -1], [1, -1, -1]], -3.0),
    ([[5]], 5.0),
])
def test_lambda_min_approx(rows, want):
    val, err = lambda_min_approx(matrix(rows))
    assert err <= 1e-10
    assert abs(val - want) <= 1e-10


def test_approx_on_dn_like_matrix():
    from hoffkit.lemmas import dn_matrix
    val, err = lambda_min_approx(dn_matrix(4, [1, 1, 1]))
    assert val <= -3 + 1e-10


def test_approx_convergence_error():
    with pytest.raises(ConvergenceError):
        lambda_min_approx(matrix([[1, 2, 3], [2, 5, 7], [3, 7, 1]]), tol=1e-10, max_sweeps=0)


def test_sign_switch_identity_and_involution():
    m = matrix([[-2, 1, -1], [1, -1, 1], [-1, 1, -1]])
    assert sign_switch(m, [1, 1, 1]) == m
    d = [1, -1, 1]
    assert sign_switch(sign_switch(m, d), d) == m
    with pytest.raises(MatrixError):
        sign_switch(m, [1, 2, 1])


def test_switch_normalises_path():
    from hoffkit.lemmas import path_matrix, path_switch_vector
    signs = [1, -1, -1, 1]
    m = sign_switch(path_matrix(5, signs), path_switch_vector(signs))
    assert all(m[i, i + 1] == 1 for i in range(4))


small_int = st.integers(-4, 4)


@st.composite
def symmetric(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            num = draw(small_int)
            den = draw(st.sampled_from([1, 1, 1, 2, 3]))
            rows[i][j] = rows[j][i] = Fraction(num, den)
    return matrix(rows)


@settings(max_examples=150, deadline=None)
@given(symmetric(), st.sampled_from([0, 1, 2, 3, Fraction(5, 2)]))
def test_verdict_matches_numpy(m, t):
    v = classify_lambda_min(m, t)
    assert v.validate()
    lam = float(np.linalg.eigvalsh(m.to_numpy()).min())
    if v.relation is Relation.GREATER:
        assert lam > -float(t) - 1e-9
    elif v.relation is Relation.LESS:
        assert lam < -float(t) + 1e-9
    else:
        assert abs(lam + float(t)) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1), min_size=n, max_size=n)),
    st.integers(0, 4))
def test_singular_gram_minus_shift_is_equal(x, t):
    # X X^T with X of rank < n is PSD and singular, so X X^T - tI has lambda_min exactly -t
    n = len(x)
    g = [[sum(a * b for a, b in zip(x[i], x[j])) - (t if i == j else 0) for j in range(n)] for i in range(n)]
    v = classify_lambda_min(matrix(g), t)
    assert v.relation is Relation.EQUAL
    assert v.validate()


@settings(max_examples=100, deadline=None)
@given(symmetric(), st.lists(st.sampled_from([1, -1]), min_size=6, max_size=6))
def test_switch_preserves_verdict(m, d):
    s = sign_switch(m, d[: m.order])
    assert classify_lambda_min(s, 2).relation is classify_lambda_min(m, 2).relation


def test_approx_converges_past_cancellation_floor():
    # off-diagonal norm once stalled near 1e-7 here through cancellation
    m = matrix([[-2, 5, "5/3", 0, 3, 0], [5, -1, 0, "3/4", "-5/2", "-4/3"], ["5/3", 0, -1, 1, "-1/2", -2],
                [0, "3/4", 1, 0, "1/2", 1], [3, "-5/2", "-1/2", "1/2", "-4/3", -1], [0, "-4/3", -2, 1, -1, "1/2"]])
    val, err = lambda_min_approx(m)
    assert err <= 1e-10
    assert abs(val - np.linalg.eigvalsh(m.to_numpy()).min()) < 1e-9
