"""Exact checks of the forbidden-configuration matrices and their -3 eigenvectors.

Every ``*_matrix`` builder returns the displayed matrix for given sign
parameters; every ``*_vector`` builder returns the explicit kernel vector of
``B + 3I``.  Indices in the formulas are 1-based; the code translates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .spectral import Relation, RationalSymmetricMatrix, classify_lambda_min, matrix, sign_switch

EQUAL = frozenset({Relation.EQUAL})
LESS = frozenset({Relation.LESS})
AT_MOST = frozenset({Relation.EQUAL, Relation.LESS})


class LemmaParameterError(ValueError):
    pass


def _signs(signs: Sequence[int], length: int, what: str) -> list[int]:
    signs = list(signs)
    if len(signs) != length:
        raise LemmaParameterError(f"{what}: expected {length} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise LemmaParameterError(f"{what}: signs must be +1 or -1")
    return signs


def _zeros(n):
    return [[0] * n for _ in range(n)]


def _sym(rows) -> RationalSymmetricMatrix:
    return matrix(rows)


def kernel_identity(b: RationalSymmetricMatrix, x: Sequence) -> bool:
    """(B + 3I) x == 0 exactly, with x non-zero."""
    return any(x) and not any(b.shifted(3).matvec(x))


def _neg_prod(eps: Sequence[int], lo: int, hi: int) -> int:
    """prod_{k=lo}^{hi} (-eps_k) with 1-based k; empty product is 1."""
    return prod(-eps[k - 1] for k in range(lo, hi + 1))


@dataclass
class LemmaCase:
    lemma: str
    params: dict
    verdict: Relation | None
    passed: bool
    matrix: RationalSymmetricMatrix | None = field(default=None, repr=False)
    vector: list | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {"lemma": self.lemma, "params": self.params,
               "verdict": str(self.verdict) if self.verdict is not None else None, "pass": self.passed}
        if not self.passed and self.matrix is not None:
            out["matrix"] = self.matrix.to_json()["rows"]
        if not self.passed and self.vector is not None:
            out["vector"] = [str(x) for x in self.vector]
        return out


# -- path with both ends carrying two fats ----------------------------------------

def path_matrix(n: int, signs: Sequence[int], middles: Sequence | None = None) -> RationalSymmetricMatrix:
    if n < 2:
        raise LemmaParameterError("path lemma needs n >= 2")
    eps = _signs(signs, n - 1, "path lemma")
    mids = [Fraction(-1)] * (n - 2) if middles is None else [Fraction(m) for m in middles]
    if len(mids) != n - 2 or any(m > -1 for m in mids):
        raise LemmaParameterError("path lemma: need n-2 middle diagonal entries, each <= -1")
    a = _zeros(n)
    a[0][0] = a[n - 1][n - 1] = -2
    for i in range(1, n - 1):
        a[i][i] = mids[i - 1]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = eps[i]
    return _sym(a)


def path_switch_vector(signs: Sequence[int]) -> list[int]:
    """1, e1, e1 e2, ..., e1...e_{n-1}."""
    out = [1]
    for s in signs:
        out.append(out[-1] * s)
    return out


def verify_path_lemma(n: int, signs: Sequence[int], middles: Sequence | None = None) -> LemmaCase:
    b = path_matrix(n, signs, middles)
    verdict = classify_lambda_min(b, 3).relation
    all_minus_one = middles is None or all(Fraction(m) == -1 for m in middles)
    ok = verdict in (EQUAL if all_minus_one else AT_MOST)
    b_prime = path_matrix(n, signs)  # middles replaced by -1
    switched = sign_switch(b_prime, path_switch_vector(signs))
    ok = ok and all(switched[i, i + 1] == 1 for i in range(n - 1))
    ok = ok and classify_lambda_min(b_prime, 3).relation is Relation.EQUAL
    params = {"n": n, "signs": list(signs)}
    if middles is not None:
        params["middles"] = [str(Fraction(m)) for m in middles]
    return LemmaCase("path", params, verdict, ok, b)


# -- D_n ----------------------------------------------------------------------

def dn_matrix(n: int, signs: Sequence[int]) -> RationalSymmetricMatrix:
    if n < 4:
        raise LemmaParameterError("D_n lemma needs n >= 4")
    eps = _signs(signs, n - 1, "D_n lemma")
    a = _zeros(n)
    for i in range(n):
        a[i][i] = -1
    a[0][0] = -2
    for i in range(1, n - 2):  # edges v_i v_{i+1}, i = 1..n-3 with eps_i
        a[i - 1][i] = a[i][i - 1] = eps[i - 1]
    a[n - 3][n - 2] = a[n - 2][n - 3] = eps[n - 3]  # v_{n-2} v_{n-1}: eps_{n-2}
    a[n - 3][n - 1] = a[n - 1][n - 3] = eps[n - 2]  # v_{n-2} v_n: eps_{n-1}
    return _sym(a)


def dn_vector(n: int, signs: Sequence[int]) -> list[int]:
    eps = _signs(signs, n - 1, "D_n lemma")
    x = [2 * _neg_prod(eps, i, n - 3) for i in range(1, n - 2)]
    x.append(2)
    x += [-eps[n - 3], -eps[n - 2]]
    return x


def verify_dn_lemma(n: int, signs: Sequence[int]) -> LemmaCase:
    b = dn_matrix(n, signs)
    x = dn_vector(n, signs)
    verdict = classify_lambda_min(b, 3).relation
    ok = kernel_identity(b, x) and verdict in AT_MOST
    return LemmaCase("D_n", {"n": n, "signs": list(signs)}, verdict, ok, b, x)


# -- path glued to K_{1,1,2} --------------------------------------------------------

def path_clique_matrix(n: int, signs: Sequence[int], eps: int) -> RationalSymmetricMatrix:
    if n < 1:
        raise LemmaParameterError("path+K1,1,2 lemma needs n >= 1")
    if eps not in (0, 1):
        raise LemmaParameterError("epsilon must be 0 or 1")
    e = _signs(signs, n - 1, "path+K1,1,2 lemma")
    delta = 1 - eps
    size = n + 3
    a = _zeros(size)
    for i in range(size):
        a[i][i] = -1
    a[0][0] = -2
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = e[i]
    p, k1, k2, k3 = n - 1, n, n + 1, n + 2
    a[p][k1] = a[k1][p] = 1
    a[p][k2] = a[k2][p] = 1
    a[p][k3] = a[k3][p] = eps
    a[k1][k2] = a[k2][k1] = delta
    a[k1][k3] = a[k3][k1] = 1
    a[k2][k3] = a[k3][k2] = 1
    return _sym(a)


def path_clique_vector(n: int, signs: Sequence[int], eps: int) -> list[Fraction]:
    e = _signs(signs, n - 1, "path+K1,1,2 lemma")
    x = [Fraction(2 * _neg_prod(e, i, n - 1)) for i in range(1, n)]
    x += [Fraction(2), Fraction(-1), Fraction(-1), Fraction(2 * (eps - 1), eps - 2)]
    return x


def verify_path_clique_lemma(n: int, signs: Sequence[int], eps: int) -> LemmaCase:
    b = path_clique_matrix(n, signs, eps)
    x = path_clique_vector(n, signs, eps)
    verdict = classify_lambda_min(b, 3).relation
    ok = kernel_identity(b, x) and verdict in AT_MOST
    return LemmaCase("path+K1,1,2", {"n": n, "signs": list(signs), "eps": eps}, verdict, ok, b, x)


# -- cycles ---------------------------------------------------------------------

def cycle_matrix(n: int, signs: Sequence[int]) -> RationalSymmetricMatrix:
    if n < 4:
        raise LemmaParameterError("cycle lemma needs n >= 4")
    e = _signs(signs, n, "cycle lemma")
    if sum(1 for s in e if s == 1) % 2:
        raise LemmaParameterError("cycle lemma needs an even number of (+)-edges")
    a = _zeros(n)
    for i in range(n):
        a[i][i] = -1
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = e[i]
    a[0][n - 1] = a[n - 1][0] = e[n - 1]
    return _sym(a)


def cycle_vector(n: int, signs: Sequence[int]) -> list[int]:
    return [1] + [_neg_prod(signs, 1, i - 1) for i in range(2, n + 1)]


ODD_CYCLE_SUBMATRIX = ((-1, 1, -1), (1, -1, 1), (-1, 1, -1))


def verify_cycle_lemma(n: int, signs: Sequence[int]) -> LemmaCase:
    b = cycle_matrix(n, signs)
    x = cycle_vector(n, signs)
    verdict = classify_lambda_min(b, 3).relation
    ok = kernel_identity(b, x) and verdict in AT_MOST
    switched = sign_switch(b, path_switch_vector(signs[: n - 1]))
    if n % 2 == 0:
        first = [Fraction(0)] * n
        first[0], first[1], first[n - 1] = Fraction(-1), Fraction(1), Fraction(1)
        circulant = all(switched[i, j] == first[(j - i) % n] for i in range(n) for j in range(n))
        ok = ok and circulant and verdict is Relation.EQUAL
    else:
        ok = ok and classify_lambda_min(matrix(ODD_CYCLE_SUBMATRIX), 3).relation is Relation.EQUAL
    return LemmaCase("cycle", {"n": n, "signs": list(signs)}, verdict, ok, b, x)


# -- path attached to a cycle through a triangle ------------------------------------

def path_cycle_matrix(m: int, n: int, path_signs: Sequence[int], cycle_signs: Sequence[int]) -> RationalSymmetricMatrix:
    """``cycle_signs`` are eps_2..eps_n (eps_1 is the +1 triangle edge)."""
    if m < 1 or n < 3:
        raise LemmaParameterError("path+cycle lemma needs m >= 1 and n >= 3")
    d = _signs(path_signs, m - 1, "path+cycle lemma (path)")
    e = [1] + _signs(cycle_signs, n - 1, "path+cycle lemma (cycle)")
    if prod(e[1:]) != (-1) ** (n - 1):
        raise LemmaParameterError("path+cycle lemma needs an odd number of (+)-edges on the cycle")
    size = m + n
    a = _zeros(size)
    for i in range(size):
        a[i][i] = -1
    a[0][0] = -2
    for i in range(m - 1):
        a[i][i + 1] = a[i + 1][i] = d[i]
    vm, c1, c2 = m - 1, m, m + 1
    a[vm][c1] = a[c1][vm] = 1
    a[vm][c2] = a[c2][vm] = 1
    a[c1][c2] = a[c2][c1] = 1
    for k in range(2, n):  # v_{m+k} v_{m+k+1} carries eps_k
        i, j = m + k - 1, m + k
        a[i][j] = a[j][i] = e[k - 1]
    a[c1][m + n - 1] = a[m + n - 1][c1] = e[n - 1]
    return _sym(a)


def path_cycle_vector(m: int, n: int, path_signs: Sequence[int], cycle_signs: Sequence[int]) -> list[int]:
    d = list(path_signs)
    e = [1] + list(cycle_signs)
    delta = _neg_prod(d, 1, m - 1)
    x = [2] + [2 * _neg_prod(d, 1, i - 1) for i in range(2, m + 1)]
    x += [-delta, -delta]
    x += [-delta * _neg_prod(e, 2, i - m - 1) for i in range(m + 3, m + n + 1)]
    return x


def verify_path_cycle_lemma(m: int, n: int, path_signs: Sequence[int], cycle_signs: Sequence[int]) -> LemmaCase:
    b = path_cycle_matrix(m, n, path_signs, cycle_signs)
    x = path_cycle_vector(m, n, path_signs, cycle_signs)
    verdict = classify_lambda_min(b, 3).relation
    ok = kernel_identity(b, x) and verdict in AT_MOST
    return LemmaCase("path+cycle", {"m": m, "n": n, "path_signs": list(path_signs),
                                    "cycle_signs": list(cycle_signs)}, verdict, ok, b, x)


# -- constant matrices ------------------------------------------------------------

def _fixed_cases() -> Iterable[tuple[str, dict, tuple, frozenset]]:
    for i, rows in enumerate((
        ((-1, 1, 0), (1, -2, 1), (0, 1, -1)),
        ((-1, -1, 0), (-1, -2, 1), (0, 1, -1)),
        ((-1, -1, 0), (-1, -2, -1), (0, -1, -1)),
    )):
        yield "non-adjacent neighbours of v*", {"case": i + 1}, rows, EQUAL
    for i, rows in enumerate((
        ((-1, 1, 1), (1, -1, -1), (1, -1, -1)),
        ((-1, -1, -1), (-1, -1, -1), (-1, -1, -1)),
    )):
        yield "triangle with a (-)-edge", {"case": i + 1}, rows, EQUAL
    for case, rows in zip("abd", (
        ((-2, 1, 1), (1, -1, -1), (1, -1, -1)),
        ((-2, 1, -1), (1, -1, 1), (-1, 1, -1)),
        ((-2, -1, -1), (-1, -1, -1), (-1, -1, -1)),
    )):
        yield "marked triangle", {"case": case}, rows, LESS
    yield "odd cycle submatrix", {}, ODD_CYCLE_SUBMATRIX, EQUAL
    for e1, e2 in product((1, -1), repeat=2):
        yield "v* cut vertex", {"eps": [e1, e2]}, ((-1, e1, 0), (e1, -2, e2), (0, e2, -1)), EQUAL
    for e1, e2, e3 in product((1, -1), repeat=3):
        yield "claw at v* (centre)", {"eps": [e1, e2, e3]}, (
            (-2, e1, e2, e3), (e1, -1, 0, 0), (e2, 0, -1, 0), (e3, 0, 0, -1)), AT_MOST
        yield "claw at v* (leaf)", {"eps": [e1, e2, e3]}, (
            (-1, e1, e2, e3), (e1, -2, 0, 0), (e2, 0, -1, 0), (e3, 0, 0, -1)), AT_MOST
    for e12, e13, e23, e24, e34 in product((1, -1), repeat=5):
        yield "K1,1,2 with v* of degree two", {"eps": [e12, e13, e23, e24, e34]}, (
            (-2, e12, e13, 0), (e12, -1, e23, e24), (e13, e23, -1, e34), (0, e24, e34, -1)), AT_MOST
    for t in (1, 2, 3):
        yield "K1,t", {"t": t}, ((-t,),), EQUAL if t == 3 else frozenset({Relation.GREATER})


def verify_fixed_matrix_lemmas() -> list[LemmaCase]:
    out = []
    for name, params, rows, expected in _fixed_cases():
        b = matrix(rows)
        verdict = classify_lambda_min(b, 3)
        ok = verdict.relation in expected and verdict.validate()
        params = dict(params, expected=sorted(str(r) for r in expected))
        out.append(LemmaCase(name, params, verdict.relation, ok, b))
    return out


# -- sweeps -------------------------------------------------------------------------

def all_signs(k: int):
    return product((1, -1), repeat=k)


def sweep_dn(max_n: int = 10) -> list[LemmaCase]:
    return [verify_dn_lemma(n, s) for n in range(4, max_n + 1) for s in all_signs(n - 1)]


def sweep_path_clique(max_n: int = 8) -> list[LemmaCase]:
    return [verify_path_clique_lemma(n, s, eps) for n in range(1, max_n + 1)
            for s in all_signs(n - 1) for eps in (0, 1)]


def sweep_cycle(max_n: int = 10) -> list[LemmaCase]:
    return [verify_cycle_lemma(n, s) for n in range(4, max_n + 1) for s in all_signs(n)
            if sum(1 for x in s if x == 1) % 2 == 0]


def sweep_path_cycle(max_total: int = 10) -> list[LemmaCase]:
    out = []
    for m in range(1, max_total - 2):
        for n in range(3, max_total - m + 1):
            for ps in all_signs(m - 1):
                for cs in all_signs(n - 1):
                    if prod(cs) == (-1) ** (n - 1):
                        out.append(verify_path_cycle_lemma(m, n, ps, cs))
    return out


def sweep_path(max_n: int = 8) -> list[LemmaCase]:
    out = [verify_path_lemma(n, s) for n in range(2, max_n + 1) for s in all_signs(n - 1)]
    for n in range(3, max_n + 1):
        out.append(verify_path_lemma(n, [1] * (n - 1), [-2] + [-1] * (n - 3)))
        out.append(verify_path_lemma(n, [1] * (n - 1), ["-3/2"] * (n - 2)))
    return out


def run_all(max_dn: int = 10, max_path_clique: int = 8, max_cycle: int = 10, max_path_cycle: int = 10,
            max_path: int = 8) -> list[LemmaCase]:
    return (verify_fixed_matrix_lemmas() + sweep_path(max_path) + sweep_dn(max_dn)
            + sweep_path_clique(max_path_clique) + sweep_cycle(max_cycle) + sweep_path_cycle(max_path_cycle))
