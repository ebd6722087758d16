"""Smith normal form over R and linear systems solved through it."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..ring import LocalElement, invert
from .sparse import SparseMatrix

log = logging.getLogger(__name__)


@dataclass
class SNFResult:
    """``left @ M @ right`` is diag(pi^e_1, ..., pi^e_rank) padded with zeros."""

    exponents: list
    rank: int
    left: SparseMatrix
    right: SparseMatrix

    @property
    def torsion(self) -> list:
        return [e for e in self.exponents if e > 0]


def _dense_identity(field, n):
    z, o = LocalElement.zero(field), LocalElement.one(field)
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def _from_dense(field, rows_labels, col_labels, dense):
    return SparseMatrix.from_dense(field, dense, rows_labels, col_labels) if dense else \
        SparseMatrix(field, rows_labels, col_labels)


def smith_normal_form(M: SparseMatrix) -> SNFResult:
    F = M.field
    m, n = M.shape
    A = M.to_dense()
    U = _dense_identity(F, m)
    V = _dense_identity(F, n)
    exps = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    key = (x.valuation(), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        e, i, j = best
        if i != t:
            A[i], A[t] = A[t], A[i]
            U[i], U[t] = U[t], U[i]
        if j != t:
            for row in A:
                row[j], row[t] = row[t], row[j]
            for row in V:
                row[j], row[t] = row[t], row[j]
        piv = A[t][t]
        u = piv.unit_part()
        if not (u.den.is_one() and u.num.is_one()):
            ui = invert(u)
            for row in A:
                if row[t]:
                    row[t] = row[t] * ui
            for row in V:
                if row[t]:
                    row[t] = row[t] * ui
            piv = A[t][t]
        for i2 in range(t + 1, m):
            x = A[i2][t]
            if not x:
                continue
            q = x / piv
            rt, ri = A[t], A[i2]
            for j2 in range(t, n):
                if rt[j2]:
                    ri[j2] = ri[j2] - q * rt[j2]
            ut, ui_ = U[t], U[i2]
            for j2 in range(m):
                if ut[j2]:
                    ui_[j2] = ui_[j2] - q * ut[j2]
        for j2 in range(t + 1, n):
            x = A[t][j2]
            if not x:
                continue
            q = x / piv
            for row in A:
                if row[t]:
                    row[j2] = row[j2] - q * row[t]
            for row in V:
                if row[t]:
                    row[j2] = row[j2] - q * row[t]
        exps.append(e)
        t += 1
    left = _from_dense(F, M.rows, M.rows, U)
    right = _from_dense(F, M.col_labels, M.col_labels, V)
    return SNFResult(exps, len(exps), left, right)


def snf_exponents(M: SparseMatrix) -> list:
    return smith_normal_form(M).exponents


def _coerce(F, x):
    if isinstance(x, LocalElement):
        return x
    if isinstance(x, str):
        from ..ring.text import parse
        return parse(x, F)
    return LocalElement.constant(F, x)


def solve_membership(M: SparseMatrix, b, explain: bool = False, snf: SNFResult | None = None):
    """Solve ``M x = b`` over R.

    ``b`` is a dense list or a sparse {row: entry} dict. Returns the list
    ``x`` or None when no solution exists in R. With ``explain=True`` a
    ``(x, reason)`` pair is returned; ``reason`` is None on success.
    Pass a precomputed ``snf`` of ``M`` to solve many systems cheaply.
    """
    F = M.field
    m, n = M.shape
    if isinstance(b, dict):
        bvec = [b.get(i, LocalElement.zero(F)) for i in range(m)]
    else:
        bvec = [_coerce(F, x) for x in b]
        if len(bvec) != m:
            raise ValueError("right-hand side has the wrong length")
    if snf is None:
        snf = smith_normal_form(M)
    c = []
    for row in snf.left.to_dense() if m else []:
        acc = LocalElement.zero(F)
        for u, bi in zip(row, bvec):
            if u and bi:
                acc = acc + u * bi
        c.append(acc)
    reason = None
    y = []
    for k in range(n):
        if k < snf.rank:
            ck, e = c[k], snf.exponents[k]
            if ck and ck.valuation() < e:
                reason = (f"coordinate {k} needs division by pi^{e - ck.valuation()}: "
                          "solvable over the fraction field but not over R")
                break
            y.append(ck / LocalElement.pi_power(F, e) if ck else LocalElement.zero(F))
        else:
            y.append(LocalElement.zero(F))
    if reason is None:
        for k in range(snf.rank, m):
            if c[k]:
                reason = "right-hand side is outside the column span over the fraction field"
                break
    if reason is not None:
        log.debug("solve_membership: %s", reason)
        return (None, reason) if explain else None
    x = []
    V = snf.right.to_dense() if n else []
    for i in range(n):
        acc = LocalElement.zero(F)
        for k in range(n):
            if V[i][k] and y[k]:
                acc = acc + V[i][k] * y[k]
        x.append(acc)
    return (x, None) if explain else x
