"""Column reduction with valuation-minimal pivoting, and kernels."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..ring import LocalElement
from .sparse import SparseMatrix


@dataclass
class ReductionResult:
    """``reduced == input @ transform`` with ``transform`` invertible over R.

    ``pivot_map`` sends each pivot row to its pivot column; ``pivots`` lists
    the same pairs in the order they were chosen. Columns not in
    ``pivot_map.values()`` are zero in ``reduced``.
    """

    reduced: SparseMatrix
    transform: SparseMatrix
    pivot_map: dict
    pivots: list = field(default_factory=list)

    @property
    def pivot_columns(self) -> list[int]:
        return sorted(self.pivot_map.values())

    @property
    def zero_columns(self) -> list[int]:
        used = set(self.pivot_map.values())
        return [j for j in range(self.reduced.ncols) if j not in used]

    @property
    def rank(self) -> int:
        return len(self.pivot_map)


def _axpy(target: dict, q: LocalElement, src: dict):
    """target -= q * src, in place, dropping zeros."""
    for i, x in src.items():
        t = q * x
        prev = target.get(i)
        if prev is None:
            target[i] = -t
        else:
            nv = prev - t
            if nv.is_zero():
                del target[i]
            else:
                target[i] = nv


def reduce_columns(M: SparseMatrix, order=None) -> ReductionResult:
    """Valuation-pivot column reduction.

    Repeatedly picks, among the not-yet-pivoted columns, the nonzero entry of
    least valuation (ties: lowest row index, then earliest column in
    ``order``), and clears its row in every other remaining column. Every
    elimination quotient lies in R because the pivot is valuation-minimal.
    """
    n = M.ncols
    if order is None:
        order = list(range(n))
    else:
        order = list(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of the column indices")
    pos = {c: k for k, c in enumerate(order)}
    A = [dict(c) for c in M.cols]
    one = LocalElement.one(M.field)
    T = [{j: one} for j in range(n)]
    remaining = set(range(n))
    pivot_map = {}
    pivots = []
    while True:
        best = None
        for c in remaining:
            pc = pos[c]
            for i, x in A[c].items():
                key = (x.valuation(), i, pc)
                if best is None or key < best[0]:
                    best = (key, i, c)
        if best is None:
            break
        _, r, c = best
        remaining.discard(c)
        pivot_map[r] = c
        pivots.append((r, c))
        p = A[c][r]
        for c2 in sorted(remaining, key=pos.__getitem__):
            x = A[c2].get(r)
            if x is None:
                continue
            q = x / p
            _axpy(A[c2], q, A[c])
            _axpy(T[c2], q, T[c])
    reduced = SparseMatrix(M.field, M.rows, M.col_labels, A)
    transform = SparseMatrix(M.field, M.col_labels, M.col_labels, T)
    return ReductionResult(reduced, transform, pivot_map, pivots)


def kernel_basis(M: SparseMatrix) -> list[dict]:
    """R-basis of {x : M x = 0} as sparse vectors {column index: entry}.

    The vectors are columns of an invertible matrix, hence primitive.
    """
    res = reduce_columns(M)
    return [dict(res.transform.cols[j]) for j in res.zero_columns]


def column_rank(M: SparseMatrix) -> int:
    return reduce_columns(M).rank
