"""Slow replace-or-keep construction of the kappa/mu split.

Examines n-simplices one at a time, solving for a relation among the
boundaries of the current mu set and the new simplex. Kept for
differential testing against the pivot-reduction implementation.
"""

from __future__ import annotations

from ..chain import weighted_boundary
from ..complex import WeightedComplex
from ..linalg import SparseMatrix, kernel_basis, solve_membership
from ..ring import LocalElement
from .core import _check_dim
from .types import BasisCycle, KMuSplit


def _primitive(v: dict) -> dict:
    low = min(c.valuation() for c in v.values())
    if not low:
        return v
    F = next(iter(v.values())).field
    p = LocalElement.pi_power(F, low)
    return {i: c / p for i, c in v.items()}


def reference_split(X: WeightedComplex, n: int, order=None) -> KMuSplit:
    _check_dim(X, n)
    simp = list(X.simplices(n))
    if order is not None:
        simp = [tuple(s) if not isinstance(s, int) else X.simplices(n)[s] for s in order]
    if n == 0:
        return KMuSplit(0, simp, [])
    D = weighted_boundary(X, n)
    idx = X.index(n)
    F = X.field
    mu: list = []
    kappa: list = []
    for s in simp:
        cand = mu + [s]
        A = SparseMatrix(F, D.rows, cand, [D.column(idx[t]) for t in cand])
        ker = kernel_basis(A)
        if not ker:
            mu.append(s)
            continue
        rel = _primitive(ker[0])
        last = len(cand) - 1
        if rel.get(last) is not None and rel[last].is_unit():
            kappa.append(s)
            continue
        drop = next(i for i in sorted(rel) if i != last and rel[i].is_unit())
        kappa.append(mu.pop(drop))
        mu.append(s)
    order_ix = {t: i for i, t in enumerate(X.simplices(n))}
    return KMuSplit(n, sorted(kappa, key=order_ix.get), sorted(mu, key=order_ix.get))


def reference_basis(X: WeightedComplex, split: KMuSplit) -> list[BasisCycle]:
    """beta_hat for a given split by solving d(sum r mu) = -d(kappa)."""
    n = split.dim
    F = X.field
    if n == 0:
        return [BasisCycle(k, {}, X.weight(k)) for k in split.kappa]
    D = weighted_boundary(X, n)
    idx = X.index(n)
    Mmu = SparseMatrix(F, D.rows, split.mu, [D.column(idx[m]) for m in split.mu])
    out = []
    for k in split.kappa:
        rhs = {i: -c for i, c in D.column(idx[k]).items()}
        x = solve_membership(Mmu, rhs)
        if x is None:
            raise ArithmeticError(f"no cycle through {X.name(k)}")
        coeffs = {m: c for m, c in zip(split.mu, x) if c}
        out.append(BasisCycle(k, coeffs, X.weight(k)))
    return out
