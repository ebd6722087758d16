"""Command-line front end: ``weighthom <verb> ...``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .bistructure import (BiStructure, crossing_components, is_lean, loop_complex,
                          verify_theorem6)
from .complex import WeightedComplex, read_complex
from .errors import WeightHomError
from .fixtures import ALIASES, load_fixture
from .homology import (homology_direct, homology_structure, k_basis,
                       kappa_mu_split, quotient_homology, render_invariants,
                       render_pairing, theta_injectivity)
from .ring import render
from .ring.field import Field


class UsageError(Exception):
    pass


def _load(path: str, field: Field | None) -> WeightedComplex:
    if os.path.exists(path):
        X = read_complex(path)
    elif path.removesuffix(".json") in ALIASES:
        X = load_fixture(path)
    else:
        raise FileNotFoundError(f"no such file or fixture: {path}")
    return X.with_field(field) if field is not None else X


def _dims(X: WeightedComplex, dim):
    if dim is None:
        return list(range(X.dim + 1))
    if not 0 <= dim <= X.dim:
        raise UsageError(f"--dim {dim} outside 0..{X.dim}")
    return [dim]


def _order(X: WeightedComplex, n: int, seed):
    if seed is None:
        return None
    seq = list(X.simplices(n))
    random.Random(seed * 1009 + n).shuffle(seq)
    return seq


def _emit(args, text: str, doc):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_homology(args) -> int:
    X = _load(args.input, args.field)
    lines, docs = [], []
    for n in _dims(X, args.dim):
        inv = homology_direct(X, n, _order(X, n, args.order))
        lines.append(render_invariants(n, inv))
        docs.append({"dim": n, **inv.to_dict()})
        if args.oracle:
            other, _ = homology_structure(X, n, _order(X, n, args.order))
            ok = other == inv
            lines.append(f"  structure route: {other} [{'agree' if ok else 'DISAGREE'}]")
            docs[-1]["structure_agrees"] = ok
            if not ok:
                _emit(args, "\n".join(lines), {"homology": docs})
                return 1
    _emit(args, "\n".join(lines), {"homology": docs})
    return 0


def cmd_basis(args) -> int:
    X = _load(args.input, args.field)
    lines, docs = [], []
    for n in _dims(X, args.dim):
        order = _order(X, n, args.order)
        split = kappa_mu_split(X, n, order)
        lines.append(f"dim {n}: K = {{{', '.join(X.name(s) for s in split.kappa)}}}  "
                     f"M = {{{', '.join(X.name(s) for s in split.mu)}}}")
        cycles = k_basis(X, n, order)
        for b in cycles:
            terms = [X.name(b.kappa)]
            for m, c in sorted(b.coefficients.items()):
                terms.append(f"({render(c)})*{X.name(m)}")
            lines.append(f"  beta_hat[{X.name(b.kappa)}] = " + " + ".join(terms))
        docs.append({**split.to_dict(X.name), "cycles": [b.to_dict(X.name) for b in cycles]})
    _emit(args, "\n".join(lines), {"basis": docs})
    return 0


def cmd_pairing(args) -> int:
    X = _load(args.input, args.field)
    blocks, docs = [], []
    for n in _dims(X, args.dim):
        inv, pairing = homology_structure(X, n, _order(X, n, args.order))
        blocks.append(render_invariants(n, inv) + "\n" + render_pairing(pairing, X.name))
        docs.append({"invariants": inv.to_dict(), **pairing.to_dict(X.name)})
    _emit(args, "\n\n".join(blocks), {"pairing": docs})
    return 0


def _vprime(X: WeightedComplex, spec: str):
    try:
        return int(spec)
    except ValueError:
        pass
    Y = _load(spec, None)
    if set(Y.weights) != set(X.weights):
        raise UsageError("--vprime complex has different simplices")
    return Y.weights


def cmd_quotient(args) -> int:
    X = _load(args.input, args.field)
    wp = _vprime(X, args.vprime)
    lines, docs = [], []
    for n in _dims(X, args.dim):
        inv = quotient_homology(X, wp, n)
        lines.append(f"H_{n}^v(X/theta) = {inv}")
        docs.append({"dim": n, **inv.to_dict()})
    _emit(args, "\n".join(lines), {"quotient": docs})
    return 0


def cmd_theta(args) -> int:
    X = _load(args.input, args.field)
    lines, docs = [], []
    for n in _dims(X, args.dim):
        v = theta_injectivity(X, n)
        if v.injective:
            lines.append(f"theta_{n}: injective")
        else:
            w = " + ".join(f"({c})*{X.name(s)}" for s, c in sorted(v.witness.items()))
            lines.append(f"theta_{n}: not injective; integral torsion {v.integral_torsion}; "
                         f"witness {w} of order {v.order}")
        docs.append(v.to_dict(X.name))
    _emit(args, "\n".join(lines), {"theta": docs})
    return 0


def cmd_bistruct(args) -> int:
    if args.s is None or args.t is None:
        raise UsageError("bistruct needs --s and --t")
    b = BiStructure.parse(args.s, args.t)
    X = loop_complex(b, args.field or Field.rationals())
    cc = crossing_components(b)
    lines = ["loop      vertices"]
    loops_doc = []
    for i, lp in enumerate(b.all_loops()):
        lines.append(f"{lp.label:<9} {sorted(lp.vertices)}")
        loops_doc.append({"id": i, "label": lp.label, "vertices": sorted(lp.vertices)})
    lines.append(f"nerve f-vector {X.counts()}, lean: {is_lean(X)}, crossing components: {cc.count}")
    invs = [homology_direct(X, n) for n in range(X.dim + 1)]
    lines += [render_invariants(n, inv) for n, inv in enumerate(invs)]
    doc = {"loops": loops_doc, "f_vector": X.counts(), "lean": is_lean(X),
           "crossing_components": cc.count,
           "homology": [{"dim": n, **inv.to_dict()} for n, inv in enumerate(invs)]}
    rep = verify_theorem6(b)
    if rep.lean:
        lines.append("closed forms: " + ", ".join(
            f"H_{n} {'match' if ok else 'MISMATCH'}" for n, ok in enumerate(rep.matches)))
        doc["closed_forms_match"] = rep.matches
    _emit(args, "\n".join(lines), doc)
    return 0 if not rep.lean or rep.ok else 1


def cmd_check(args) -> int:
    from .oracle import check_case, differential_run, summary

    if args.input:
        X = _load(args.input, args.field)
        reports = [check_case(X, seed=args.seed)]
    else:
        reports = differential_run(args.seed, args.cases, field_=args.field)
    if args.json:
        print(json.dumps({"reports": [r.to_dict() for r in reports],
                          "summary": json.loads(summary(reports))}, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        print(summary(reports))
    return 0 if all(r.verdict == "match" for r in reports) else 1


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except WeightHomError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weighthom",
                                description="Weighted simplicial homology over F[[pi]].")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="complex document (JSON) or bundled fixture name")
        sp.add_argument("--dim", type=int, help="single degree (default: all)")
        sp.add_argument("--field", type=_field_arg, default=None, help="q or fp:P")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--order", type=int, default=None,
                        help="seed for a random simplex processing order")
        sp.add_argument("--oracle", action="store_true", help="cross-check with a second route")
        return sp

    common(sub.add_parser("homology", help="module invariants")).set_defaults(fn=cmd_homology)
    common(sub.add_parser("basis", help="kappa/mu split and K-basis")).set_defaults(fn=cmd_basis)
    common(sub.add_parser("pairing", help="torsion pairing table")).set_defaults(fn=cmd_pairing)
    q = common(sub.add_parser("quotient", help="homology of X/theta"))
    q.add_argument("--vprime", required=True,
                   help="second weight: a complex document or a constant")
    q.set_defaults(fn=cmd_quotient)
    common(sub.add_parser("theta", help="injectivity of H_n(X;Z) -> H_n^v")).set_defaults(
        fn=cmd_theta)
    b = common(sub.add_parser("bistruct", help="loop complex of two dot-bracket strings"),
               needs_input=False)
    b.add_argument("--s", help="first structure")
    b.add_argument("--t", help="second structure")
    b.set_defaults(fn=cmd_bistruct)
    c = common(sub.add_parser("check", help="differential verification suite"),
               needs_input=False)
    c.add_argument("input", nargs="?", help="check a single complex instead")
    c.add_argument("--seed", type=int, default=7)
    c.add_argument("--cases", type=int, default=200)
    c.set_defaults(fn=cmd_check)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (WeightHomError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
