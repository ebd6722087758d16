"""Smith normal form over the integers (for integral homology)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class IntegerSNF:
    """``left @ M @ right == diag(factors)``; ``left_inv`` inverts ``left``."""

    factors: list
    left: list
    left_inv: list
    right: list


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def integer_snf(M, transforms: bool = False):
    """Invariant factors d_1 | d_2 | ... (positive) of an integer matrix.

    Pivots are chosen by least absolute value and improved by Euclidean
    remainders until the pivot divides its whole remaining block.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    Ui = _identity(m)
    V = _identity(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]
        for row in Ui:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(i, k, q):
        # row_i += q * row_k
        if not q:
            return
        ai, ak = A[i], A[k]
        for j in range(n):
            if ak[j]:
                ai[j] += q * ak[j]
        ui, uk = U[i], U[k]
        for j in range(m):
            if uk[j]:
                ui[j] += q * uk[j]
        for row in Ui:
            if row[i]:
                row[k] -= q * row[i]

    def add_col(j, k, q):
        # col_j += q * col_k
        if not q:
            return
        for row in A:
            if row[k]:
                row[j] += q * row[k]
        for row in V:
            if row[k]:
                row[j] += q * row[k]

    factors = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                best = None
                for i in range(t, m):
                    x = A[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, "r")
                for j in range(t, n):
                    x = A[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]
        factors.append(A[t][t])
        t += 1
    if transforms:
        return IntegerSNF(factors, U, Ui, V)
    return factors


def integer_rank_and_torsion(M):
    f = integer_snf(M)
    return len(f), [d for d in f if d > 1]
