"""Pure-Python graded reduction kernels (reference and fallback backend).

A graded matrix stores residue-field coefficients ``c[r, j]``; the entry it
represents is ``c[r, j] * pi^(row_w[r] - col_w[j])``. Column operations with
a valuation-minimal pivot keep that shape, so the reduction can run on the
coefficients alone with the weights used only for pivot choice.
"""

from __future__ import annotations


def reduce_graded(cols, row_w, col_w, pos, field):
    """Reduce sparse columns ``cols`` (list of {row: coef}) in place.

    ``pos[j]`` is the processing rank of column j (tie-break after
    valuation and row index). Returns ``(pivots, transform)`` where
    ``pivots`` lists (row, col) in selection order and ``transform`` is the
    list of sparse transform columns (coefficients of the same graded form,
    indexed by original column).
    """
    n = len(cols)
    one = field.one
    T = [{j: one} for j in range(n)]
    remaining = set(range(n))
    pivots = []
    sub, mul, inv = field.sub, field.mul, field.inv
    while True:
        best = None
        for c in remaining:
            cw, pc = col_w[c], pos[c]
            for r in cols[c]:
                key = (row_w[r] - cw, r, pc)
                if best is None or key < best:
                    best = key
                    bc = c
        if best is None:
            break
        r = best[1]
        c = bc
        remaining.discard(c)
        pivots.append((r, c))
        pcol, ptr = cols[c], T[c]
        pinv = inv(pcol[r])
        for c2 in remaining:
            x = cols[c2].get(r)
            if x is None:
                continue
            f = mul(x, pinv)
            tgt = cols[c2]
            for i, y in pcol.items():
                nv = sub(tgt.get(i, 0), mul(f, y))
                if nv:
                    tgt[i] = nv
                else:
                    tgt.pop(i, None)
            tt = T[c2]
            for i, y in ptr.items():
                nv = sub(tt.get(i, 0), mul(f, y))
                if nv:
                    tt[i] = nv
                else:
                    tt.pop(i, None)
    return pivots, T


def reduce_graded_modp(ct, row_w, col_w, pos, p):
    """Dense mod-p variant with the compiled backend's exact signature.

    ``ct`` is an int64 array of shape (ncols, nrows) (column-major view of
    the matrix) and is reduced in place. Returns ``(pivots, tt)`` where
    ``tt[c, j]`` is the transform entry (row j, column c).
    """
    import numpy as np

    nc, nr = ct.shape
    C = [list(map(int, ct[c])) for c in range(nc)]
    rw = list(map(int, row_w))
    cwl = list(map(int, col_w))
    pl = list(map(int, pos))
    T = [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    remaining = [True] * nc
    pivots = []
    while True:
        best = None
        for c in range(nc):
            if not remaining[c]:
                continue
            col = C[c]
            cw, pc = cwl[c], pl[c]
            for r in range(nr):
                if col[r]:
                    key = (rw[r] - cw, r, pc)
                    if best is None or key < best:
                        best = key
                        bc = c
        if best is None:
            break
        r, c = best[1], bc
        remaining[c] = False
        pivots.append((r, c))
        pcol, ptr = C[c], T[c]
        pinv = pow(pcol[r], -1, p)
        for c2 in range(nc):
            if not remaining[c2]:
                continue
            x = C[c2][r]
            if not x:
                continue
            f = x * pinv % p
            tgt = C[c2]
            for i in range(nr):
                y = pcol[i]
                if y:
                    tgt[i] = (tgt[i] - f * y) % p
            tt = T[c2]
            for i in range(nc):
                y = ptr[i]
                if y:
                    tt[i] = (tt[i] - f * y) % p
    ct[:, :] = np.array(C, dtype=np.int64).reshape(nc, nr) if nc else ct
    return pivots, np.array(T, dtype=np.int64).reshape(nc, nc)


def rank_modp(a, p):
    """Rank of an int64 matrix over F_p (Gaussian elimination on a copy)."""
    rows = [[int(x) % p for x in row] for row in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    for j in range(n):
        piv = None
        for i in range(rank, m):
            if rows[i][j]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[j], -1, p)
        for i in range(rank + 1, m):
            x = rows[i][j]
            if x:
                f = x * inv % p
                ri = rows[i]
                for k in range(j, n):
                    if pr[k]:
                        ri[k] = (ri[k] - f * pr[k]) % p
        rank += 1
        if rank == m:
            break
    return rank
