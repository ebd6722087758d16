"""Quotient homology H^v(X/theta), theta-injectivity and the weight filtration."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chain import _weights, classical_boundary_rows, theta, weighted_boundary
from ..complex import WeightedComplex
from ..errors import FieldMismatchError, ThetaUndefinedError
from ..linalg import (SparseMatrix, integer_snf, kernel_basis, reduce_columns,
                      smith_normal_form, solve_membership)
from ..ring import LocalElement
from .core import field_homology_rank, homology_direct, kappa_mu_split
from .types import ModuleInvariants, ThetaVerdict


def _check_order(X, wp, w):
    for s in X.weights:
        if wp[s] > w[s]:
            raise ThetaUndefinedError(
                f"theta undefined: w'({X.name(s)}) = {wp[s]} exceeds w({X.name(s)}) = {w[s]}")


def _diag_columns(X, n, wp, w):
    F = X.field
    return [{i: LocalElement.pi_power(F, w[s] - wp[s])}
            for i, s in enumerate(X.simplices(n))]


def _presentation(F, gens: SparseMatrix, relations: list[dict]) -> ModuleInvariants:
    """Invariants of span(gens) / span(relations); gens must be independent."""
    ngen = gens.ncols
    if not ngen:
        return ModuleInvariants(0)
    snf = smith_normal_form(gens)
    cols = []
    for rel in relations:
        x = solve_membership(gens, rel, snf=snf)
        if x is None:
            raise ArithmeticError("relation outside the generated module")
        cols.append({i: c for i, c in enumerate(x) if c})
    if not cols:
        return ModuleInvariants(ngen)
    rel = SparseMatrix(F, list(range(ngen)), list(range(len(cols))), cols)
    s = smith_normal_form(rel)
    return ModuleInvariants(ngen - s.rank, tuple(s.torsion))


def _basis_of_span(F, rows, vectors: list[dict]) -> SparseMatrix:
    """Independent columns spanning the same R-module as ``vectors``."""
    M = SparseMatrix(F, rows, list(range(len(vectors))), vectors)
    red = reduce_columns(M)
    cols = [red.reduced.column(j) for j in red.pivot_columns]
    return SparseMatrix(F, rows, list(range(len(cols))), cols)


def _relative_cycles(X, n, wp, w) -> SparseMatrix:
    """Basis of {x in C_n : d^v x in theta(C_(n-1))}."""
    F = X.field
    simp = X.simplices(n)
    if n == 0:
        return SparseMatrix.identity(F, simp)
    D = weighted_boundary(X, n, w)
    A = D.hstack(SparseMatrix(F, D.rows, X.simplices(n - 1), _diag_columns(X, n - 1, wp, w)))
    nn = len(simp)
    gens = []
    for v in kernel_basis(A):
        proj = {i: c for i, c in v.items() if i < nn and c}
        if proj:
            gens.append(proj)
    return _basis_of_span(F, simp, gens)


def quotient_homology(X: WeightedComplex, vprime, n: int, v=None) -> ModuleInvariants:
    """Homology of C(X,R)/theta(C(X,R)) in degree n, by a free presentation."""
    wp, w = _weights(X, vprime), _weights(X, v)
    _check_order(X, wp, w)
    F = X.field
    Z = _relative_cycles(X, n, wp, w)
    rels = _diag_columns(X, n, wp, w)
    if n < X.dim:
        D = weighted_boundary(X, n + 1, w)
        rels += [D.column(j) for j in range(D.ncols)]
    return _presentation(F, Z, [r for r in rels if r])


def theta_cokernel(X: WeightedComplex, vprime, n: int, v=None) -> ModuleInvariants:
    """H_n^v(X) modulo the image of H_n^{v'}(X) under theta."""
    wp, w = _weights(X, vprime), _weights(X, v)
    _check_order(X, wp, w)
    F = X.field
    simp = X.simplices(n)
    Xw = X.with_weights(w)
    Xp = X.with_weights(wp)
    if n == 0:
        Zv = SparseMatrix.identity(F, simp)
        Zp = [{i: LocalElement.one(F)} for i in range(len(simp))]
    else:
        Zv = _basis_of_span(F, simp, kernel_basis(weighted_boundary(Xw, n)))
        Zp = kernel_basis(weighted_boundary(Xp, n))
    T = theta(X, wp, w, n)
    rels = [T.apply(z) for z in Zp]
    if n < X.dim:
        D = weighted_boundary(Xw, n + 1)
        rels += [D.column(j) for j in range(D.ncols)]
    return _presentation(F, Zv, [r for r in rels if r])


def _integral_membership(rows, vec) -> bool:
    """Is the integer vector in the integer column span of ``rows``?"""
    if not rows or not rows[0]:
        return not any(vec)
    snf = integer_snf(rows, transforms=True)
    c = [sum(u * b for u, b in zip(urow, vec)) for urow in snf.left]
    for k, d in enumerate(snf.factors):
        if c[k] % d:
            return False
    return not any(c[len(snf.factors):])


def theta_injectivity(X: WeightedComplex, n: int) -> ThetaVerdict:
    """Is H_n(X; Z) -> H_n^v(X) injective?  (R over the rationals only.)"""
    if X.field.characteristic != 0:
        raise FieldMismatchError("theta_injectivity needs the rational field")
    simp = X.simplices(n)
    if n >= X.dim or not X.simplices(n + 1):
        return ThetaVerdict(n, True, [])
    rows = classical_boundary_rows(X, n + 1)
    snf = integer_snf(rows, transforms=True)
    torsion = [d for d in snf.factors if d > 1]
    if not torsion:
        return ThetaVerdict(n, True, [])
    i = next(k for k, d in enumerate(snf.factors) if d > 1)
    d = snf.factors[i]
    c = {simp[r]: snf.left_inv[r][i] for r in range(len(simp)) if snf.left_inv[r][i]}
    F = X.field
    vec = {X.index(n)[s]: LocalElement.constant(F, a) for s, a in c.items()}
    target = theta(X, 0, None, n).apply(vec)
    x = solve_membership(weighted_boundary(X, n + 1), target)
    if x is None:
        raise ArithmeticError("torsion cycle does not die under theta")
    return ThetaVerdict(n, False, torsion, c, d, x)


def verify_witness(X: WeightedComplex, verdict: ThetaVerdict) -> bool:
    """Independent checks on a non-injectivity witness."""
    if verdict.witness is None:
        return False
    n = verdict.dim
    idx = X.index(n)
    vec = [0] * len(idx)
    for s, a in verdict.witness.items():
        vec[idx[s]] = a
    if n >= 1:
        d = classical_boundary_rows(X, n)
        if any(sum(r[j] * vec[j] for j in range(len(vec))) for r in d):
            return False
    up = classical_boundary_rows(X, n + 1)
    if _integral_membership(up, vec):
        return False
    if not _integral_membership(up, [verdict.order * a for a in vec]):
        return False
    F = X.field
    T = theta(X, 0, None, n).apply({i: LocalElement.constant(F, a) for i, a in enumerate(vec) if a})
    return solve_membership(weighted_boundary(X, n + 1), T) is not None


def filtration_weights(X: WeightedComplex, r: int) -> dict:
    return {s: (w if len(s) - 1 <= r else 0) for s, w in X.weights.items()}


@dataclass
class FiltrationStep:
    r: int
    invariants: list
    checks: dict = field(default_factory=dict)


@dataclass
class FiltrationReport:
    steps: list
    field_ranks: list

    @property
    def ok(self) -> bool:
        return all(all(s.checks.values()) for s in self.steps)


def weight_filtration_report(X: WeightedComplex) -> FiltrationReport:
    """Invariants of every H^{v_r}, v_r = v up to dimension r and 0 above."""
    ranks = [field_homology_rank(X, n) for n in range(X.dim + 1)]
    steps = []
    for r in range(X.dim + 1):
        Xr = X.with_weights(filtration_weights(X, r))
        steps.append(FiltrationStep(r, [homology_direct(Xr, n) for n in range(X.dim + 1)]))
    for r, st in enumerate(steps):
        st.checks[f"rank H_{r}^(v_{r}) = rank H_{r}(X,R)"] = st.invariants[r].rank == ranks[r]
        if r >= 1:
            prev = steps[r - 1].invariants[r - 1].rank
            st.checks[f"rank H_{r - 1}^(v_{r}) = rank H_{r - 1}^(v_{r - 1})"] = \
                st.invariants[r - 1].rank == prev
    return FiltrationReport(steps, ranks)


def skeleton_quotient_expected(X: WeightedComplex, n: int) -> ModuleInvariants:
    """Closed form for the n-skeleton with v' = 1: torsion {w(k) : k in K}."""
    split = kappa_mu_split(X, n)
    return ModuleInvariants(0, tuple(X.weight(k) for k in split.kappa))
