"""Text rendering of homology results."""

from __future__ import annotations

from .types import ModuleInvariants, TorsionPairing


def render_invariants(n: int, inv: ModuleInvariants) -> str:
    return f"H_{n}^v = {inv}"


def render_pairing(pairing: TorsionPairing, name=str) -> str:
    rows = [(name(k), name(m), str(e)) for k, m, e in pairing.pairs]
    head = ("kappa", "mu", "exponent")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(3)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [f"pairing in degree {pairing.dim} ({pairing.method})", fmt.format(*head).rstrip()]
    lines += [fmt.format(*r).rstrip() for r in rows]
    free = ", ".join(name(k) for k in pairing.free_kappas) or "-"
    lines.append(f"free kappas: {free}")
    return "\n".join(lines)
