"""Graded matrices: residue-field coefficients with implicit pi-powers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..linalg.sparse import SparseMatrix
from ..ring import LocalElement
from ..ring.field import Field
from . import _graded_py

_MAX_COMPILED_P = 2 ** 31


class GradedMatrix:
    """Entry (r, j) is ``coef[r, j] * pi^(row_w[r] - col_w[j])``.

    Every nonzero coefficient must sit at a position with
    ``row_w[r] >= col_w[j]`` so that the entry lies in R.
    """

    def __init__(self, field: Field, rows, col_labels, row_w, col_w, cols):
        self.field = field
        self.rows = tuple(rows)
        self.col_labels = tuple(col_labels)
        self.row_w = tuple(int(w) for w in row_w)
        self.col_w = tuple(int(w) for w in col_w)
        self.cols = [{i: field(x) for i, x in c.items() if x} for c in cols]
        if len(self.row_w) != len(self.rows) or len(self.col_w) != len(self.col_labels):
            raise ValueError("weight vectors do not match the bases")
        if len(self.cols) != len(self.col_labels):
            raise ValueError("column count does not match column labels")
        for j, c in enumerate(self.cols):
            for i in c:
                if self.row_w[i] < self.col_w[j]:
                    raise ValueError(
                        f"entry ({i}, {j}) would have negative valuation "
                        f"{self.row_w[i] - self.col_w[j]}")

    @property
    def shape(self):
        return len(self.rows), len(self.col_labels)

    def entry(self, i, j) -> LocalElement:
        c = self.cols[j].get(i)
        if not c:
            return LocalElement.zero(self.field)
        return LocalElement.monomial(self.field, c, self.row_w[i] - self.col_w[j])

    def to_sparse(self) -> SparseMatrix:
        F = self.field
        cols = [{i: LocalElement.monomial(F, c, self.row_w[i] - self.col_w[j])
                 for i, c in col.items()} for j, col in enumerate(self.cols)]
        return SparseMatrix(F, self.rows, self.col_labels, cols)

    def select_rows(self, idx) -> "GradedMatrix":
        idx = list(idx)
        pos = {i: k for k, i in enumerate(idx)}
        cols = [{pos[i]: x for i, x in c.items() if i in pos} for c in self.cols]
        return GradedMatrix(self.field, [self.rows[i] for i in idx], self.col_labels,
                            [self.row_w[i] for i in idx], self.col_w, cols)

    def dense_coefficients(self) -> np.ndarray:
        """int64 array (rows x cols); prime fields only."""
        a = np.zeros(self.shape, dtype=np.int64)
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                a[i, j] = x
        return a


@dataclass
class GradedReduction:
    """Outcome of :func:`graded_reduce` on a graded matrix ``M``.

    ``reduced`` and ``transform`` are graded too: ``reduced == M @ transform``
    with transform entry (j, c) scaled by pi^(col_w[j] - col_w[c]).
    """

    matrix: GradedMatrix
    pivots: list
    reduced: list
    transform: list
    backend: str

    @property
    def pivot_map(self) -> dict:
        return dict(self.pivots)

    @property
    def pivot_columns(self) -> list:
        return sorted(c for _, c in self.pivots)

    @property
    def zero_columns(self) -> list:
        used = {c for _, c in self.pivots}
        return [j for j in range(len(self.reduced)) if j not in used]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def transform_column(self, c) -> dict:
        """Column c of the transform as {index: LocalElement}."""
        F = self.matrix.field
        cw = self.matrix.col_w
        return {j: LocalElement.monomial(F, x, cw[j] - cw[c])
                for j, x in self.transform[c].items()}


def _use_compiled(field: Field, backend: str | None):
    from . import _compiled
    if backend == "python":
        return None
    if field.characteristic == 0 or field.characteristic >= _MAX_COMPILED_P:
        if backend == "compiled":
            raise ValueError("compiled kernels only support prime fields below 2**31")
        return None
    if _compiled is None:
        if backend == "compiled":
            raise RuntimeError("compiled kernels are not available")
        return None
    return _compiled


def graded_reduce(M: GradedMatrix, order=None, backend: str | None = None) -> GradedReduction:
    """Valuation-pivot column reduction of a graded matrix.

    Pivot rule: least valuation ``row_w[r] - col_w[c]`` over nonzero entries
    of unprocessed columns; ties broken by row index, then by position of
    the column in ``order``.
    """
    nr, nc = M.shape
    if order is None:
        order = list(range(nc))
    order = list(order)
    if sorted(order) != list(range(nc)):
        raise ValueError("order must be a permutation of the column indices")
    pos = [0] * nc
    for k, c in enumerate(order):
        pos[c] = k
    mod = _use_compiled(M.field, backend)
    if mod is None:
        cols = [dict(c) for c in M.cols]
        pivots, T = _graded_py.reduce_graded(cols, M.row_w, M.col_w, pos, M.field)
        return GradedReduction(M, pivots, cols, T, "python")
    ct = np.ascontiguousarray(M.dense_coefficients().T)
    pivots, tt = mod.reduce_graded_modp(
        ct, np.asarray(M.row_w, dtype=np.int64), np.asarray(M.col_w, dtype=np.int64),
        np.asarray(pos, dtype=np.int64), M.field.characteristic)
    reduced = [{int(i): int(ct[c, i]) for i in np.flatnonzero(ct[c])} for c in range(nc)]
    T = [{int(i): int(tt[c, i]) for i in np.flatnonzero(tt[c])} for c in range(nc)]
    return GradedReduction(M, [(int(r), int(c)) for r, c in pivots], reduced, T, "compiled")


def rank_over_field(rows, field: Field, backend: str | None = None) -> int:
    """Rank of a matrix with integer (or field) entries over ``field``."""
    if not len(rows) or not len(rows[0]):
        return 0
    mod = _use_compiled(field, backend)
    if field.characteristic:
        a = np.asarray([[field(x) for x in r] for r in rows], dtype=np.int64)
        return (mod or _graded_py).rank_modp(a, field.characteristic)
    return _rank_rational(rows)


def _rank_rational(rows) -> int:
    from fractions import Fraction

    m = [[Fraction(x) for x in r] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    for j in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][j]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, nr):
            x = m[i][j]
            if x:
                f = x / pr[j]
                ri = m[i]
                for k in range(j, nc):
                    if pr[k]:
                        ri[k] -= f * pr[k]
        rank += 1
        if rank == nr:
            break
    return rank
