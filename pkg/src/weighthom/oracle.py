"""Brute-force verifiers kept independent of the engine's linear algebra."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .chain import check_chain_complex, check_naturality, classical_boundary_rows
from .complex import WeightedComplex, random_complex, random_subweight, skeleton
from .errors import OracleLimitError
from .homology import (skeleton_quotient_expected, cycle_matrix,
                       field_homology_rank, homology_direct, homology_structure,
                       kappa_mu_split, quotient_homology)
from .linalg import SparseMatrix, snf_exponents
from .ring import LocalElement
from .ring.field import Field

MINOR_LIMIT = 10


def _nonzero_part(M: SparseMatrix):
    rows = sorted({i for c in M.cols for i in c})
    cols = [j for j, c in enumerate(M.cols) if c]
    pos = {r: k for k, r in enumerate(rows)}
    A = [[None] * len(cols) for _ in rows]
    for k, j in enumerate(cols):
        for i, x in M.cols[j].items():
            A[pos[i]][k] = x
    return A


def minor_valuation_invariants(M: SparseMatrix, limit: int = MINOR_LIMIT) -> list:
    """Invariant-factor exponents from determinantal divisors.

    Delta_k is the least valuation of a k x k minor; exponents are the
    successive differences. Minors are expanded along their first row
    with memoisation on (row set, column set).
    """
    A = _nonzero_part(M)
    m = len(A)
    n = len(A[0]) if m else 0
    if max(m, n) > limit:
        raise OracleLimitError(f"{m} x {n} exceeds the minor-enumeration bound {limit}")
    F = M.field
    zero = LocalElement.zero(F)
    memo: dict = {}

    def det(rows, cols):
        if not rows:
            return LocalElement.one(F)
        key = (rows, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        r, rest = rows[0], rows[1:]
        acc = zero
        for t, c in enumerate(cols):
            a = A[r][c]
            if a is None:
                continue
            sub = det(rest, cols[:t] + cols[t + 1:])
            if sub:
                term = a * sub
                acc = acc + term if t % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    deltas = [0]
    for k in range(1, min(m, n) + 1):
        best = None
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                d = det(rows, cols)
                if d:
                    v = d.valuation()
                    if best is None or v < best:
                        best = v
        if best is None:
            break
        deltas.append(best)
    return [deltas[k] - deltas[k - 1] for k in range(1, len(deltas))]


# integer homology -------------------------------------------------------------


def _ext_gcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def naive_invariant_factors(M) -> list:
    """Nonzero invariant factors of an integer matrix.

    Bezout row echelon, transpose, repeat until diagonal; then a gcd/lcm
    sweep restores the divisibility chain.
    """
    B = naive_echelon([list(map(int, r)) for r in M])
    while B and any(B[i][j] for i in range(len(B)) for j in range(len(B[0])) if i != j):
        B = naive_echelon([list(r) for r in zip(*B)])
    diag = [abs(B[i][i]) for i in range(len(B))]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
    return sorted(diag)


def naive_echelon(A) -> list:
    m = len(A)
    n = len(A[0]) if m else 0
    r0 = 0
    for c in range(n):
        for i in range(r0 + 1, m):
            a, b = A[r0][c], A[i][c]
            if not b:
                continue
            if a and b % a == 0:
                f = b // a
                A[i] = [q - f * p for p, q in zip(A[r0], A[i])]
                continue
            g, x, y = _ext_gcd(a, b)
            u, v = a // g, b // g
            top = [x * p + y * q for p, q in zip(A[r0], A[i])]
            bot = [-v * p + u * q for p, q in zip(A[r0], A[i])]
            A[r0], A[i] = top, bot
        if r0 < m and A[r0][c]:
            r0 += 1
        if r0 == m:
            break
    return [row for row in A if any(row)]


def integer_homology(X: WeightedComplex, n: int):
    """(rank, torsion) of H_n(X; Z) ignoring weights."""
    cn = len(X.simplices(n))
    rank_n = len(naive_invariant_factors(classical_boundary_rows(X, n))) if n >= 1 and cn else 0
    up = naive_invariant_factors(classical_boundary_rows(X, n + 1)) if n < X.dim else []
    return cn - rank_n - len(up), [d for d in up if d > 1]


# differential runner --------------------------------------------------------------


@dataclass
class OracleReport:
    case: int
    seed: int
    engine: list
    oracle: list
    checks: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        same = self.engine == self.oracle
        return "match" if same and all(self.checks.values()) else "mismatch"

    def line(self) -> str:
        failed = [k for k, v in self.checks.items() if not v]
        eng = "; ".join(str(x) for x in self.engine)
        tail = f" failed={','.join(failed)}" if failed else ""
        return f"case {self.case} seed {self.seed}: {self.verdict} [{eng}]{tail}"

    def to_dict(self) -> dict:
        return {"case": self.case, "seed": self.seed, "verdict": self.verdict,
                "engine": [x.to_dict() for x in self.engine],
                "oracle": [x.to_dict() for x in self.oracle], "checks": self.checks}


def _perturbed(X: WeightedComplex) -> WeightedComplex:
    return X.with_weights({s: w + (len(s) == 1) for s, w in X.weights.items()})


def check_case(X: WeightedComplex, engine_X: WeightedComplex | None = None,
               seed: int = 0, case: int = 0) -> OracleReport:
    """Run every engine/oracle comparison on one complex."""
    E = engine_X if engine_X is not None else X
    dims = range(X.dim + 1)
    engine = [homology_structure(E, n)[0] for n in dims]
    oracle = [homology_direct(X, n) for n in dims]
    checks = {"boundary_squared": check_chain_complex(X),
              "naturality": check_naturality(X, random_subweight(X, seed))}
    minor_ok = True
    for n in range(X.dim):
        B = cycle_matrix(X, n, kappa_mu_split(X, n).kappa).to_sparse()
        try:
            minor_ok &= minor_valuation_invariants(B) == sorted(snf_exponents(B))
        except OracleLimitError:
            pass
    checks["snf_vs_minors"] = minor_ok
    checks["skeleton_quotient"] = all(
        quotient_homology(skeleton(X, n), 0, n) == skeleton_quotient_expected(X, n) for n in dims)
    checks["rank_over_field"] = all(
        oracle[n].rank == field_homology_rank(X, n) for n in dims)
    return OracleReport(case, seed, engine, oracle, checks)


def differential_run(seed: int, cases: int, fault_case: int | None = None,
                     max_dim: int = 3, budget: int = 15, max_weight: int = 10,
                     field_: Field | None = None) -> list[OracleReport]:
    """Seeded random suite; ``fault_case`` feeds the engine a perturbed copy."""
    rng = random.Random(seed)
    out = []
    for case in range(cases):
        s = rng.randrange(2 ** 31)
        X = random_complex(s, max_dim, budget, max_weight)
        if field_ is not None:
            X = X.with_field(field_)
        E = _perturbed(X) if case == fault_case else None
        out.append(check_case(X, E, s, case))
    return out


def summary(reports: list[OracleReport]) -> str:
    bad = [r.case for r in reports if r.verdict != "match"]
    return json.dumps({"cases": len(reports), "mismatches": bad}, sort_keys=True)


# naive covering scan for loops -------------------------------------------------------


def naive_loops(length: int, arcs) -> list[set]:
    """Loop vertex sets by testing every position against every arc."""
    arcs = sorted(arcs)
    out = []
    for i, j in [(0, length + 1)] + arcs:
        out.append({k for k in range(1, length + 1)
                    if i <= k <= j and not any(i < p < k < q < j for p, q in arcs)})
    return out
