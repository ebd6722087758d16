"""Weighted simplicial complexes: data model, validation, I/O, generators.

A simplex is a tuple of strictly increasing non-negative vertex ids. Its
i-th face omits the i-th vertex and carries the sign (-1)^i.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ValidationError
from .ring.field import QQ, Field

Simplex = tuple


def canonical_simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(int(v) for v in vertices))
    if any(v < 0 for v in s):
        raise ValueError(f"vertex ids must be non-negative: {s}")
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in simplex {s}")
    return s


def facets(s: Simplex):
    """Yield (i, face) with face the i-th codimension-one face."""
    for i in range(len(s)):
        yield i, s[:i] + s[i + 1:]


def proper_faces(s: Simplex):
    for k in range(1, len(s)):
        yield from combinations(s, k)


def _simplex_key(s):
    return (len(s), s)


@dataclass(frozen=True)
class Violation:
    kind: str  # "closure" | "monotonicity" | "weight"
    face: Simplex
    coface: Simplex | None
    message: str

    def __str__(self):
        return self.message


class WeightedComplex:
    """Finite simplicial complex with integer weights omega.

    Construction does not enforce validity; call :func:`validate` (or use
    :func:`load_complex`, which does) to check face closure and
    monotonicity.  Instances are treated as immutable.
    """

    def __init__(self, weights: Mapping[Sequence[int], int], field: Field = QQ,
                 names: Sequence[str] | None = None,
                 order: Mapping[int, Sequence[Sequence[int]]] | None = None):
        w = {}
        for s, val in weights.items():
            cs = canonical_simplex(s)
            if not cs:
                raise ValueError("empty simplex")
            if cs in w:
                raise ValueError(f"duplicate simplex {cs}")
            w[cs] = int(val)
        self._w = w
        self.field = field
        self.names = tuple(names) if names is not None else None
        by_dim: dict[int, list] = {}
        for s in w:
            by_dim.setdefault(len(s) - 1, []).append(s)
        for d in by_dim:
            by_dim[d].sort()
        if order:
            for d, seq in order.items():
                seq = [canonical_simplex(s) for s in seq]
                if sorted(seq) != by_dim.get(d, []):
                    raise ValueError(f"explicit order for dim {d} is not a permutation")
                by_dim[d] = seq
        self._by_dim = {d: tuple(v) for d, v in by_dim.items()}
        self._index = {d: {s: i for i, s in enumerate(v)} for d, v in self._by_dim.items()}

    # queries -------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, n: int) -> tuple:
        return self._by_dim.get(n, ())

    def all_simplices(self):
        for d in range(self.dim + 1):
            yield from self.simplices(d)

    def index(self, n: int) -> dict:
        return self._index.get(n, {})

    def weight(self, s: Sequence[int]) -> int:
        return self._w[tuple(s)]

    @property
    def weights(self) -> dict:
        return dict(self._w)

    def __contains__(self, s):
        return tuple(s) in self._w

    def __len__(self):
        return len(self._w)

    def counts(self) -> list[int]:
        return [len(self.simplices(d)) for d in range(self.dim + 1)]

    def __eq__(self, other):
        if not isinstance(other, WeightedComplex):
            return NotImplemented
        return (self._w == other._w and self.field == other.field
                and self._by_dim == other._by_dim)

    def __hash__(self):
        return hash(tuple(sorted(self._w.items())))

    def __repr__(self):
        return f"WeightedComplex(f-vector={self.counts()}, field={self.field.label})"

    def name(self, s: Sequence[int]) -> str:
        """Readable label: ``ABC`` with single-letter names, else ``[1,2,4]``."""
        if self.names is not None and all(v < len(self.names) for v in s):
            labels = [self.names[v] for v in s]
            if all(len(x) == 1 for x in labels):
                return "".join(labels)
            return "[" + ",".join(labels) + "]"
        return "[" + ",".join(str(v) for v in s) + "]"

    def lookup(self, label: str) -> Simplex:
        """Inverse of :meth:`name` (also accepts reversed letter orders)."""
        for s in self._w:
            if self.name(s) == label:
                return s
        if self.names is not None:
            pos = {n: i for i, n in enumerate(self.names)}
            if all(len(n) == 1 for n in self.names) and all(c in pos for c in label):
                s = tuple(sorted(pos[c] for c in label))
                if s in self._w:
                    return s
        raise KeyError(label)

    # derived complexes -----------------------------------------------------------

    def with_weights(self, weights: Mapping) -> "WeightedComplex":
        w = {s: int(weights[s]) for s in self._w}
        return WeightedComplex(w, self.field, self.names, self._order_map())

    def with_field(self, field: Field) -> "WeightedComplex":
        return WeightedComplex(self._w, field, self.names, self._order_map())

    def with_order(self, n: int, seq) -> "WeightedComplex":
        order = self._order_map()
        order[n] = list(seq)
        return WeightedComplex(self._w, self.field, self.names, order)

    def _order_map(self):
        return {d: list(v) for d, v in self._by_dim.items()}


# validation ----------------------------------------------------------------------------


def validate(X: WeightedComplex) -> list[Violation]:
    """All closure, monotonicity and sign violations (empty list means ok)."""
    out = []
    missing_seen = set()
    for s in sorted(X.weights, key=_simplex_key):
        w = X.weight(s)
        if w < 0:
            out.append(Violation("weight", s, None,
                                 f"negative weight {w} on {X.name(s)}"))
        for f in proper_faces(s):
            if f not in X and f not in missing_seen:
                missing_seen.add(f)
                out.append(Violation("closure", f, s,
                                     f"face {X.name(f)} of {X.name(s)} is missing"))
        for _, f in facets(s):
            if len(f) and f in X and X.weight(f) < w:
                out.append(Violation(
                    "monotonicity", f, s,
                    f"weight of {X.name(f)} ({X.weight(f)}) is below weight of "
                    f"its coface {X.name(s)} ({w})"))
    return out


def is_valid(X: WeightedComplex) -> bool:
    return not validate(X)


# document I/O --------------------------------------------------------------------------


def _parse_field(doc):
    f = doc.get("field", "Q")
    if not isinstance(f, str):
        raise ParseError("'field' must be a string")
    return Field.parse(f)


def complex_from_document(doc: Mapping) -> WeightedComplex:
    """Build and validate a complex from a parsed document (see README)."""
    if not isinstance(doc, Mapping):
        raise ParseError("document must be a JSON object")
    field = _parse_field(doc)
    auto_close = doc.get("auto_close", False)
    if not isinstance(auto_close, bool):
        raise ParseError("'auto_close' must be a boolean")
    names = doc.get("names")
    if names is not None and (not isinstance(names, list)
                              or not all(isinstance(n, str) for n in names)):
        raise ParseError("'names' must be an array of strings")
    entries = doc.get("simplices", [])
    if not isinstance(entries, list):
        raise ParseError("'simplices' must be an array")
    weights = {}
    for k, item in enumerate(entries):
        if not isinstance(item, Mapping) or "v" not in item or "w" not in item:
            raise ParseError(f"simplices[{k}]: expected an object with 'v' and 'w'")
        v, w = item["v"], item["w"]
        if (not isinstance(v, list) or not v
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in v)):
            raise ParseError(f"simplices[{k}].v must be a non-empty integer array")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ParseError(f"simplices[{k}].v must be strictly ascending")
        if any(x < 0 for x in v):
            raise ParseError(f"simplices[{k}].v has a negative vertex id")
        if not isinstance(w, int) or isinstance(w, bool) or w < 0:
            raise ParseError(f"simplices[{k}].w must be a non-negative integer")
        s = tuple(v)
        if s in weights:
            raise ParseError(f"simplices[{k}]: duplicate simplex {list(s)}")
        weights[s] = w
    if auto_close:
        weights = close_weights(weights)
    X = WeightedComplex(weights, field, names)
    bad = validate(X)
    if bad:
        raise ValidationError("; ".join(str(b) for b in bad), bad)
    return X


def close_weights(weights: Mapping) -> dict:
    """Add missing faces, each weighted by the max weight of its listed cofaces."""
    out = {tuple(s): w for s, w in weights.items()}
    for s in sorted(weights, key=_simplex_key, reverse=True):
        for f in proper_faces(tuple(s)):
            if f not in weights:
                out[f] = max(out.get(f, 0), weights[s])
    return out


def load_complex(text: str) -> WeightedComplex:
    """Parse a JSON document; raises ParseError or ValidationError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return complex_from_document(doc)


def read_complex(path) -> WeightedComplex:
    with open(path, encoding="utf-8") as fh:
        return load_complex(fh.read())


def complex_to_document(X: WeightedComplex) -> dict:
    doc = {"field": X.field.label, "auto_close": False}
    if X.names is not None:
        doc["names"] = list(X.names)
    doc["simplices"] = [{"v": list(s), "w": X.weight(s)}
                        for s in sorted(X.weights, key=_simplex_key)]
    return doc


def save_complex(X: WeightedComplex) -> str:
    """JSON text with one simplex per line."""
    doc = complex_to_document(X)
    head = {k: v for k, v in doc.items() if k != "simplices"}
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()]
    body = ",\n".join(f"    {json.dumps(e)}" for e in doc["simplices"])
    return "{\n" + "\n".join(lines) + '\n  "simplices": [\n' + body + "\n  ]\n}"


# derived complexes ---------------------------------------------------------------------


def skeleton(X: WeightedComplex, n: int) -> WeightedComplex:
    if n < 0:
        raise ValueError("skeleton dimension must be non-negative")
    w = {s: X.weight(s) for s in X.weights if len(s) - 1 <= n}
    order = {d: list(X.simplices(d)) for d in range(min(n, X.dim) + 1)}
    return WeightedComplex(w, X.field, X.names, order)


def constant_weight(X: WeightedComplex, c: int = 0) -> WeightedComplex:
    if c < 0:
        raise ValueError("weights must be non-negative")
    return X.with_weights({s: c for s in X.weights})


# random generation ----------------------------------------------------------------------


def random_complex(seed: int, max_dim: int = 2, budget: int = 10, max_weight: int = 8,
                   field: Field = QQ) -> WeightedComplex:
    """Deterministic random valid complex.

    Random facets are added (with their faces) while every dimension stays
    within ``budget`` simplices. Weights are drawn for maximal simplices,
    then pushed down: a face gets the max over its cofaces plus a random
    non-negative increment (capped at max_weight).
    """
    rng = random.Random(seed)
    if budget < 1:
        return WeightedComplex({}, field)
    nv = rng.randint(min(2, budget), budget)
    chosen = {(v,) for v in range(nv)}
    counts = [nv] + [0] * max_dim
    for _ in range(rng.randint(1, 3 * budget)):
        d = rng.randint(1, max_dim) if max_dim and nv > 1 else 0
        d = min(d, nv - 1)
        if d == 0:
            continue
        top = tuple(sorted(rng.sample(range(nv), d + 1)))
        new = {f for f in [top, *proper_faces(top)] if f not in chosen}
        extra = [0] * (max_dim + 1)
        for f in new:
            extra[len(f) - 1] += 1
        if all(c + e <= budget for c, e in zip(counts, extra)):
            chosen |= new
            counts = [c + e for c, e in zip(counts, extra)]
    simplices = sorted(chosen, key=_simplex_key)
    return WeightedComplex(_propagated_weights(simplices, rng, max_weight), field)


def _cofaces(simplices):
    cof: dict = {s: [] for s in simplices}
    for s in simplices:
        for _, f in facets(s):
            if f:
                cof[f].append(s)
    return cof


def _propagated_weights(simplices, rng, max_weight):
    cofaces = _cofaces(simplices)
    w = {}
    for s in sorted(simplices, key=_simplex_key, reverse=True):
        if not cofaces[s]:
            w[s] = rng.randint(0, max_weight)
        else:
            base = max(w[t] for t in cofaces[s])
            w[s] = min(max_weight, base + rng.randint(0, 2))
    return w


def random_weights(X: WeightedComplex, seed: int, max_weight: int = 8) -> WeightedComplex:
    """Same complex with fresh random monotone weights."""
    rng = random.Random(seed)
    return X.with_weights(_propagated_weights(list(X.weights), rng, max_weight))


def random_subweight(X: WeightedComplex, seed: int) -> dict:
    """A random valid weight omega' with omega' <= omega pointwise."""
    rng = random.Random(seed)
    cofaces = _cofaces(list(X.weights))
    w = {}
    for s in sorted(X.weights, key=_simplex_key, reverse=True):
        lo = max((w[t] for t in cofaces[s]), default=0)
        w[s] = rng.randint(lo, X.weight(s))
    return w
