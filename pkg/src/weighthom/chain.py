"""Weighted boundary matrices, theta chain maps and their identities."""

from __future__ import annotations

from typing import Mapping

from .complex import WeightedComplex, facets
from .errors import DimensionError, ThetaUndefinedError
from .kernels import GradedMatrix
from .linalg import SparseMatrix
from .ring import LocalElement


def _weights(X: WeightedComplex, w) -> Mapping:
    if w is None:
        return X.weights
    if isinstance(w, WeightedComplex):
        return w.weights
    if isinstance(w, int):
        return {s: w for s in X.weights}
    return w


def graded_boundary(X: WeightedComplex, n: int, weights=None) -> GradedMatrix:
    """Boundary d_n of (X, weights) as a graded matrix (coefficients +-1)."""
    if not 1 <= n <= max(X.dim, 0):
        raise DimensionError(f"boundary degree {n} outside 1..{X.dim}")
    w = _weights(X, weights)
    F = X.field
    rows = X.simplices(n - 1)
    ridx = X.index(n - 1)
    cols_s = X.simplices(n)
    one, mone = F.one, F.neg(F.one)
    cols = []
    for s in cols_s:
        col = {}
        for i, f in facets(s):
            col[ridx[f]] = one if i % 2 == 0 else mone
        cols.append(col)
    return GradedMatrix(F, rows, cols_s, [w[r] for r in rows], [w[s] for s in cols_s], cols)


def weighted_boundary(X: WeightedComplex, n: int, weights=None) -> SparseMatrix:
    """Matrix of the weighted boundary: face i of s gets (-1)^i pi^(w(face) - w(s))."""
    return graded_boundary(X, n, weights).to_sparse()


def theta(X: WeightedComplex, vprime, v, n: int) -> SparseMatrix:
    """Diagonal chain map s -> pi^(w(s) - w'(s)) s on n-chains."""
    wp, w = _weights(X, vprime), _weights(X, v)
    F = X.field
    simp = X.simplices(n)
    entries = []
    for s in simp:
        d = w[s] - wp[s]
        if d < 0:
            raise ThetaUndefinedError(
                f"theta undefined: w'({X.name(s)}) = {wp[s]} exceeds w({X.name(s)}) = {w[s]}")
        entries.append(LocalElement.pi_power(F, d))
    return SparseMatrix.diagonal(F, simp, entries)


def check_chain_complex(X: WeightedComplex, weights=None) -> bool:
    """True iff d_{n-1} d_n == 0 exactly for every n."""
    for n in range(2, X.dim + 1):
        prod = weighted_boundary(X, n - 1, weights) @ weighted_boundary(X, n, weights)
        if not prod.is_zero():
            return False
    return True


def check_naturality(X: WeightedComplex, vprime, v=None) -> bool:
    """theta_{n-1} d^{v'}_n == d^v_n theta_n for all n."""
    for n in range(1, X.dim + 1):
        lhs = theta(X, vprime, v, n - 1) @ weighted_boundary(X, n, vprime)
        rhs = weighted_boundary(X, n, v) @ theta(X, vprime, v, n)
        if lhs != rhs:
            return False
    return True


def check_theta_composition(X: WeightedComplex, w1, w2, w3) -> bool:
    """theta^{w2,w3} theta^{w1,w2} == theta^{w1,w3} in every degree."""
    for n in range(X.dim + 1):
        if theta(X, w2, w3, n) @ theta(X, w1, w2, n) != theta(X, w1, w3, n):
            return False
    return True


def classical_boundary_rows(X: WeightedComplex, n: int) -> list[list[int]]:
    """Unweighted integer boundary matrix of degree n as dense rows."""
    rows = X.simplices(n - 1)
    ridx = X.index(n - 1)
    cols = X.simplices(n)
    out = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i, f in facets(s):
            out[ridx[f]][j] = 1 if i % 2 == 0 else -1
    return out


def dump_boundary(X: WeightedComplex, n: int) -> str:
    return weighted_boundary(X, n).dump(X.name)
