"""Kappa/mu split, K-basis and the two routes to weighted homology."""

from __future__ import annotations

import logging
from collections import Counter

from ..chain import classical_boundary_rows, graded_boundary
from ..complex import WeightedComplex
from ..errors import DimensionError, PairingError
from ..kernels import GradedMatrix, graded_reduce, rank_over_field
from ..linalg import smith_normal_form
from ..ring import LocalElement
from .types import BasisCycle, KMuSplit, ModuleInvariants, TorsionPairing

log = logging.getLogger(__name__)


def _check_dim(X: WeightedComplex, n: int):
    if not 0 <= n <= X.dim:
        raise DimensionError(f"degree {n} outside 0..{X.dim}")


def _order_positions(X: WeightedComplex, n: int, order):
    """Translate an order (simplices or indices) into column indices."""
    if order is None:
        return None
    idx = X.index(n)
    out = []
    for item in order:
        out.append(item if isinstance(item, int) else idx[tuple(item)])
    if sorted(out) != list(range(len(idx))):
        raise ValueError(f"order is not a permutation of the {n}-simplices")
    return out


def _split_reduction(X, n, order, backend=None):
    D = graded_boundary(X, n)
    return D, graded_reduce(D, _order_positions(X, n, order), backend)


def kappa_mu_split(X: WeightedComplex, n: int, order=None, backend=None) -> KMuSplit:
    """Pivot columns of the reduced boundary become M, zero columns K."""
    _check_dim(X, n)
    simp = X.simplices(n)
    if n == 0:
        return KMuSplit(0, list(simp), [])
    D, red = _split_reduction(X, n, order, backend)
    rows = D.rows
    pivots = {simp[c]: rows[r] for r, c in red.pivots}
    return KMuSplit(n, [simp[c] for c in red.zero_columns],
                    [simp[c] for c in red.pivot_columns], pivots)


def k_basis(X: WeightedComplex, n: int, order=None, backend=None) -> list[BasisCycle]:
    """The distinguished cycles beta_hat, one per kappa simplex."""
    _check_dim(X, n)
    F = X.field
    simp = X.simplices(n)
    if n == 0:
        return [BasisCycle(s, {}, X.weight(s)) for s in simp]
    _, red = _split_reduction(X, n, order, backend)
    out = []
    for c in red.zero_columns:
        col = red.transform_column(c)
        coeffs = {simp[j]: x for j, x in col.items() if j != c}
        if col.get(c) != LocalElement.one(F):
            raise AssertionError("kappa coefficient is not one")
        out.append(BasisCycle(simp[c], coeffs, X.weight(simp[c])))
    return out


def cycle_matrix(X: WeightedComplex, n: int, kappa) -> GradedMatrix:
    """Im d_(n+1) written in beta_hat coordinates.

    A cycle's coordinate on beta_hat_k is its coefficient on k, since k occurs
    in no other basis cycle; so the matrix is just the kappa rows of d_(n+1).
    """
    D = graded_boundary(X, n + 1)
    idx = X.index(n)
    return D.select_rows([idx[k] for k in kappa])


def _free_rank_only(X, n):
    return n == X.dim or not X.simplices(n + 1)


def homology_direct(X: WeightedComplex, n: int, order=None) -> ModuleInvariants:
    """H_n^v = ker / im via the Smith form of the boundary in cycle coordinates."""
    split = kappa_mu_split(X, n, order)
    if _free_rank_only(X, n):
        return ModuleInvariants(len(split.kappa))
    B = cycle_matrix(X, n, split.kappa)
    snf = smith_normal_form(B.to_sparse())
    return ModuleInvariants(len(split.kappa) - snf.rank, tuple(snf.torsion))


def field_homology_rank(X: WeightedComplex, n: int, field=None) -> int:
    """dim_F H_n(X, F) from the classical boundary matrices."""
    field = field or X.field
    cn = len(X.simplices(n))
    if not cn:
        return 0
    r_n = rank_over_field(classical_boundary_rows(X, n), field) if n >= 1 else 0
    r_up = rank_over_field(classical_boundary_rows(X, n + 1), field) if n < X.dim else 0
    return cn - r_n - r_up


def _match_exponents(kappas, mus, wk, wm, target):
    """Backtracking bijection kappa subset <-> mus realising ``target`` exponents."""
    need = Counter(target)
    mus = sorted(mus, key=lambda m: -wm[m])
    used = set()
    pairs = []

    def go(i):
        if i == len(mus):
            return not +need
        m = mus[i]
        for k in sorted(kappas, key=lambda k: wk[k]):
            e = wk[k] - wm[m]
            if k in used or need[e] <= 0:
                continue
            used.add(k)
            need[e] -= 1
            pairs.append((k, m, e))
            if go(i + 1):
                return True
            pairs.pop()
            need[e] += 1
            used.discard(k)
        return False

    return pairs if go(0) else None


def homology_structure(X: WeightedComplex, n: int, order=None, backend=None):
    """Invariants from the kappa/mu pairing; returns (invariants, pairing).

    Rank is taken from homology over the residue field. The pairing comes
    from valuation-pivot reduction of the boundary in cycle coordinates and
    is checked against the Smith exponents of the same matrix.
    """
    split = kappa_mu_split(X, n, order, backend)
    rank = field_homology_rank(X, n)
    if _free_rank_only(X, n):
        if rank != len(split.kappa):
            raise PairingError(f"rank mismatch in top degree {n}")
        return ModuleInvariants(rank), TorsionPairing(n, [], list(split.kappa), "none")
    B = cycle_matrix(X, n, split.kappa)
    red = graded_reduce(B, backend=backend)
    up = X.simplices(n + 1)
    wk = {k: X.weight(k) for k in split.kappa}
    pairs = sorted(((split.kappa[r], up[c], wk[split.kappa[r]] - X.weight(up[c]))
                    for r, c in red.pivots), key=lambda p: p[0])
    snf_exps = sorted(smith_normal_form(B.to_sparse()).exponents)
    method = "pivot"
    if sorted(e for _, _, e in pairs) != snf_exps:
        log.warning("pivot pairing disagrees with Smith exponents in degree %d", n)
        mus = [up[c] for c in red.pivot_columns]
        wm = {m: X.weight(m) for m in mus}
        found = _match_exponents(split.kappa, mus, wk, wm, snf_exps)
        if found is None:
            raise PairingError(f"no kappa/mu pairing realises the exponents {snf_exps}")
        pairs, method = sorted(found), "matching"
    paired = {k for k, _, _ in pairs}
    free = [k for k in split.kappa if k not in paired]
    if len(free) != rank:
        raise PairingError(f"{len(free)} free kappas but field rank {rank} in degree {n}")
    inv = ModuleInvariants(rank, tuple(e for _, _, e in pairs))
    return inv, TorsionPairing(n, pairs, free, method)


def homology(X: WeightedComplex, n: int | None = None, method: str = "direct"):
    """Invariants for one degree, or a list for all degrees."""
    fn = homology_direct if method == "direct" else (lambda X, k: homology_structure(X, k)[0])
    if n is None:
        return [fn(X, k) for k in range(X.dim + 1)]
    return fn(X, n)
