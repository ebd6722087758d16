"""Result types of the homology engine."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..ring import LocalElement


@dataclass(frozen=True)
class ModuleInvariants:
    """R^rank (+) R/(pi^d1) (+) ... with ascending positive exponents."""

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(sorted(int(d) for d in self.torsion if d > 0)))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def length(self) -> int:
        """Length of the torsion part."""
        return sum(self.torsion)

    def __str__(self):
        parts = [f"R^{self.rank}"] if self.rank else []
        parts += [f"R/(pi^{d})" for d in self.torsion]
        return " (+) ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, d) -> "ModuleInvariants":
        return cls(int(d["rank"]), tuple(d.get("torsion", ())))


@dataclass
class KMuSplit:
    """Bipartition of the n-simplices into kappa (K) and mu (M) simplices."""

    dim: int
    kappa: list
    mu: list
    pivots: dict = field(default_factory=dict, repr=False)  # mu -> pivot row simplex

    def to_dict(self, name=str) -> dict:
        return {"dim": self.dim, "kappa": [name(s) for s in self.kappa],
                "mu": [name(s) for s in self.mu]}


@dataclass
class BasisCycle:
    """beta_hat = kappa + sum r_l mu_l, a cycle of the weighted boundary."""

    kappa: tuple
    coefficients: dict  # mu simplex -> LocalElement monomial
    weight: int = 0

    def chain(self, field) -> dict:
        out = {self.kappa: LocalElement.one(field)}
        out.update(self.coefficients)
        return out

    def degrees(self) -> dict:
        return {m: c.valuation() for m, c in self.coefficients.items()}

    @property
    def beta(self) -> dict:
        """Classical cycle beta with theta(beta) = pi^w(kappa) beta_hat."""
        out = {self.kappa: 1}
        for m, c in self.coefficients.items():
            out[m] = c.residue()  # monomial of degree w(mu) - w(kappa)
        return out

    @property
    def gamma(self) -> dict:
        """Residue of beta over F (beta already has constant coefficients)."""
        return self.beta

    def to_dict(self, name=str) -> dict:
        from ..ring import render
        return {"kappa": name(self.kappa),
                "coefficients": {name(m): render(c) for m, c in sorted(self.coefficients.items())}}


@dataclass
class TorsionPairing:
    """Pairs (kappa, mu, w(kappa) - w(mu)) realising the torsion summands."""

    dim: int
    pairs: list
    free_kappas: list
    method: str = "pivot"

    @property
    def exponents(self) -> list:
        return sorted(e for _, _, e in self.pairs)

    def to_dict(self, name=str) -> dict:
        return {"dim": self.dim, "method": self.method,
                "pairs": [[name(k), name(m), e] for k, m, e in self.pairs],
                "free_kappas": [name(k) for k in self.free_kappas]}


@dataclass
class ThetaVerdict:
    """Injectivity of H_n(X; Z) -> H_n^v(X); a witness cycle when it fails."""

    dim: int
    injective: bool
    integral_torsion: list
    witness: dict | None = None  # n-simplex -> integer coefficient
    order: int | None = None  # order of the witness class
    preimage: list | None = None  # x with d^v x = theta(witness)

    def to_dict(self, name=str) -> dict:
        d = {"dim": self.dim, "injective": self.injective,
             "integral_torsion": list(self.integral_torsion)}
        if self.witness is not None:
            d["witness"] = {name(s): c for s, c in sorted(self.witness.items())}
            d["order"] = self.order
        return d
