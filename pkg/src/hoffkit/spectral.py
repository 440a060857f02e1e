"""Exact and approximate spectral analysis of small rational symmetric matrices."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .graphs import HoffmanGraph


class MatrixError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise MatrixError(f"refusing inexact float entry {x!r}; pass a string or Fraction")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixError(f"not a rational number: {x!r}") from exc


@dataclass(frozen=True)
class RationalSymmetricMatrix:
    rows: tuple
    labels: tuple | None = None

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(x) for x in r) for r in self.rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise MatrixError(f"row {i} has length {len(r)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise MatrixError(f"not symmetric at ({i},{j}): {rows[i][j]} != {rows[j][i]}")
        object.__setattr__(self, "rows", rows)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise MatrixError("label count does not match matrix order")
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalSymmetricMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def shifted(self, t) -> RationalSymmetricMatrix:
        """M + t*I."""
        t = to_fraction(t)
        return RationalSymmetricMatrix(
            tuple(tuple(x + t if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self.rows)),
            self.labels,
        )

    def principal(self, idx: Sequence[int]) -> RationalSymmetricMatrix:
        idx = list(idx)
        labels = tuple(self.labels[i] for i in idx) if self.labels else None
        return RationalSymmetricMatrix(tuple(tuple(self.rows[i][j] for j in idx) for i in idx), labels)

    def matvec(self, x: Sequence) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, x)), Fraction(0)) for r in self.rows]

    def quadratic(self, x: Sequence) -> Fraction:
        return sum((Fraction(a) * y for a, y in zip(x, self.matvec(x))), Fraction(0))

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.rows], dtype=float).reshape(self.order, self.order)

    def to_json(self) -> dict:
        out = {"n": self.order, "rows": [[str(x) for x in r] for r in self.rows]}
        if self.labels is not None:
            out["labels"] = [str(v) for v in self.labels]
        return out

    @classmethod
    def from_json(cls, data: dict) -> RationalSymmetricMatrix:
        rows = data["rows"]
        if "n" in data and data["n"] != len(rows):
            raise MatrixError(f"declared n={data['n']} but {len(rows)} rows given")
        return cls(tuple(tuple(str(x) if not isinstance(x, int) else x for x in r) for r in rows), data.get("labels"))


def matrix(rows, labels=None) -> RationalSymmetricMatrix:
    return RationalSymmetricMatrix(tuple(tuple(r) for r in rows), tuple(labels) if labels is not None else None)


def b_matrix(h: HoffmanGraph) -> RationalSymmetricMatrix:
    """A^s - C C^T, rows in the declared slim order."""
    fats = h.fat_map()
    slim = h.slim
    rows = []
    for u in slim:
        row = []
        for v in slim:
            if u == v:
                row.append(-len(fats[u]))
            else:
                row.append(int(h.adjacent(u, v)) - len(fats[u] & fats[v]))
        rows.append(tuple(row))
    return RationalSymmetricMatrix(tuple(rows), slim)


class Relation(enum.IntEnum):
    """Position of the smallest eigenvalue relative to ``-t``."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.capitalize()


def _integer_scaled(a: RationalSymmetricMatrix) -> list[list[int]]:
    den = 1
    for r in a.rows:
        for x in r:
            den = den * x.denominator // math.gcd(den, x.denominator)
    return [[int(x * den) for x in r] for r in a.rows]


@dataclass(frozen=True)
class SpectralVerdict:
    """Exact comparison of lambda_min(M) with ``-threshold``.

    ``pivots`` is the elimination order of positive pivots and ``zero_rows``
    the indices whose residual row vanished.  For Less, ``failure`` names the
    offending index (and partner index for a zero pivot with a non-zero row)
    together with the number of pivots taken before it.
    """

    relation: Relation
    threshold: Fraction
    matrix: RationalSymmetricMatrix = field(repr=False, compare=False)
    pivots: tuple = ()
    zero_rows: tuple = ()
    failure: tuple | None = None
    _kernel_at: int = 0

    @property
    def shifted(self) -> RationalSymmetricMatrix:
        return self.matrix.shifted(self.threshold)

    @cached_property
    def pivot_values(self) -> tuple:
        """LDL^T diagonal of the shifted matrix over the pivot set, in order."""
        a = self.shifted
        vals = []
        prev = Fraction(1)
        for k in range(1, len(self.pivots) + 1):
            d = _det(a.principal(self.pivots[:k]))
            vals.append(d / prev)
            prev = d
        return tuple(vals)

    @cached_property
    def certificate(self) -> dict:
        a = self.shifted
        if self.relation is Relation.GREATER:
            return {"kind": "positive-definite", "pivot_order": list(self.pivots),
                    "pivots": [str(x) for x in self.pivot_values]}
        if self.relation is Relation.EQUAL:
            x = _lift(a, self.pivots[: self._kernel_at], {self.zero_rows[0]: Fraction(1)})
            return {"kind": "kernel", "pivot_order": list(self.pivots), "vector": x}
        i, j, npiv = self.failure
        piv = self.pivots[:npiv]
        if j is None:
            x = _lift(a, piv, {i: Fraction(1)})
        else:
            # residual S has S_ii = 0 and S_ij != 0; y = alpha*e_i + e_j gives y^T S y = -1
            s_jj = _schur_entry(a, piv, j, j)
            s_ij = _schur_entry(a, piv, i, j)
            alpha = -(s_jj + 1) / (2 * s_ij)
            x = _lift(a, piv, {i: alpha, j: Fraction(1)})
        return {"kind": "negative-direction", "vector": x}

    def validate(self) -> bool:
        """Re-check the certificate with exact arithmetic, independently of the elimination."""
        a = self.shifted
        cert = self.certificate
        if self.relation is Relation.GREATER:
            return len(self.pivots) == a.order and _leading_minors_positive(a, list(range(a.order)))
        if self.relation is Relation.EQUAL:
            x = cert["vector"]
            if not any(x) or any(a.matvec(x)):
                return False
            piv = list(self.pivots)
            return _leading_minors_positive(a, piv) and rank(a) == len(piv)
        return a.quadratic(cert["vector"]) < 0

    def to_json(self) -> dict:
        cert = dict(self.certificate)
        if "vector" in cert:
            cert["vector"] = [str(x) for x in cert["vector"]]
        return {"relation": str(self.relation), "threshold": str(self.threshold), "certificate": cert}


def classify_lambda_min(m: RationalSymmetricMatrix, t) -> SpectralVerdict:
    """Decide whether lambda_min(m) is greater than, equal to, or less than ``-t``.

    Symmetric elimination of M + tI in index order, fraction free: a positive
    pivot is eliminated, a zero pivot requires its whole residual row to vanish,
    anything else means M + tI is indefinite.
    """
    t = to_fraction(t)
    shifted = m.shifted(t)
    a = _integer_scaled(shifted)
    n = len(a)
    remaining = list(range(n))
    pivots: list[int] = []
    zero_rows: list[int] = []
    kernel_at = 0
    prev = 1
    while remaining:
        i = remaining[0]
        p = a[i][i]
        if p < 0:
            return SpectralVerdict(Relation.LESS, t, m, tuple(pivots), tuple(zero_rows), (i, None, len(pivots)))
        if p == 0:
            bad = next((j for j in remaining[1:] if a[i][j] != 0), None)
            if bad is not None:
                return SpectralVerdict(Relation.LESS, t, m, tuple(pivots), tuple(zero_rows), (i, bad, len(pivots)))
            if not zero_rows:
                kernel_at = len(pivots)
            zero_rows.append(i)
            remaining.pop(0)
            continue
        rest = remaining[1:]
        row_i = a[i]
        for j in rest:
            aj = a[j]
            aji = aj[i]
            for k in rest:
                if k < j:
                    continue
                v = (p * aj[k] - aji * row_i[k]) // prev
                aj[k] = v
                a[k][j] = v
        prev = p
        pivots.append(i)
        remaining.pop(0)
    rel = Relation.EQUAL if zero_rows else Relation.GREATER
    return SpectralVerdict(rel, t, m, tuple(pivots), tuple(zero_rows), None, kernel_at)


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    aug = [list(r) + [x] for r, x in zip(a, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c] / aug[c][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _lift(a: RationalSymmetricMatrix, piv: Sequence[int], free: dict) -> list[Fraction]:
    """Vector with given free coordinates, pivot coordinates chosen to kill the pivot rows."""
    x = [Fraction(0)] * a.order
    for k, val in free.items():
        x[k] = val
    if piv:
        app = [[a[i, j] for j in piv] for i in piv]
        rhs = [-sum((a[i, k] * val for k, val in free.items()), Fraction(0)) for i in piv]
        for i, val in zip(piv, _solve(app, rhs)):
            x[i] = val
    return x


def _schur_entry(a: RationalSymmetricMatrix, piv: Sequence[int], i: int, j: int) -> Fraction:
    x = _lift(a, piv, {i: Fraction(1)})
    return sum((a[j, k] * x[k] for k in range(a.order)), Fraction(0))


def _det(a: RationalSymmetricMatrix) -> Fraction:
    m = [list(r) for r in a.rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _leading_minors_positive(a: RationalSymmetricMatrix, order: list[int]) -> bool:
    return all(_det(a.principal(order[:k])) > 0 for k in range(1, len(order) + 1))


def rank(a) -> int:
    """Exact rank of a rational matrix (RationalSymmetricMatrix or list of rows)."""
    rows = [list(map(Fraction, r)) for r in (a.rows if isinstance(a, RationalSymmetricMatrix) else a)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def lambda_min_approx(m: RationalSymmetricMatrix, tol: float = 1e-10, max_sweeps: int = 100) -> tuple[float, float]:
    """Smallest eigenvalue by cyclic Jacobi rotations.

    Returns ``(value, error_bound)``.  The bound is the Frobenius norm of the
    remaining off-diagonal part (Weyl) plus a rounding allowance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = m.to_numpy().copy()
    n = a.shape[0]
    if n == 0:
        raise MatrixError("empty matrix has no eigenvalues")
    scale = max(1.0, float(np.abs(a).max()))
    rounding = 8 * n * np.finfo(float).eps * scale

    def off_norm():
        # summed directly: sum(a*a) - sum(diag**2) cancels catastrophically
        off = a - np.diag(np.diag(a))
        return float(np.sqrt(np.sum(off * off)))

    for _ in range(max_sweeps + 1):
        bound = off_norm() + rounding
        if bound <= tol:
            return float(np.min(np.diag(a))), bound
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not reach tol={tol} within {max_sweeps} sweeps (bound {bound:.3e})")


def sign_switch(m: RationalSymmetricMatrix, d: Sequence[int]) -> RationalSymmetricMatrix:
    """D M D with D = diag(d), d a vector of +-1."""
    d = list(d)
    if len(d) != m.order:
        raise MatrixError(f"switching vector has length {len(d)}, matrix order is {m.order}")
    if any(x not in (1, -1) for x in d):
        raise MatrixError("switching vector entries must be +1 or -1")
    return RationalSymmetricMatrix(
        tuple(tuple(d[i] * x * d[j] for j, x in enumerate(r)) for i, r in enumerate(m.rows)), m.labels
    )


def min_relation(relations) -> Relation:
    return min(relations)
