"""Named example complexes used by tests, the CLI and the docs."""

from __future__ import annotations

from itertools import combinations

from .complex import WeightedComplex, random_weights
from .ring.field import QQ, Field

FIG1_EDGE_WEIGHTS = {"AB": 3, "BC": 4, "AC": 5, "CD": 6, "AD": 7, "BD": 8}
FIG1_TRIANGLE_WEIGHTS = {"ABC": 2, "ACD": 1}


def figure1(field: Field = QQ) -> WeightedComplex:
    """Collaboration-network example: 4 authors, 6 pairs, 2 filled triangles."""
    names = "ABCD"
    pos = {c: i for i, c in enumerate(names)}
    w = {(i,): 100 for i in range(4)}
    for lab, val in {**FIG1_EDGE_WEIGHTS, **FIG1_TRIANGLE_WEIGHTS}.items():
        w[tuple(sorted(pos[c] for c in lab))] = val
    return WeightedComplex(w, field, list(names))


FIG2_WEIGHTS = {
    (1,): 9, (2,): 10, (3,): 3, (4,): 12, (5,): 8,
    (1, 2): 2, (2, 3): 2, (4, 5): 2, (1, 4): 7, (1, 5): 3,
    (2, 4): 6, (2, 5): 6, (3, 5): 3,
    (1, 2, 4): 1, (1, 2, 5): 1, (1, 4, 5): 1, (2, 4, 5): 1, (2, 3, 5): 2,
}


def figure2(field: Field = QQ) -> WeightedComplex:
    """Loop complex of the two-structure example; vertices are loops 1..5."""
    w = {tuple(v - 1 for v in s): val for s, val in FIG2_WEIGHTS.items()}
    return WeightedComplex(w, field, [str(i) for i in range(1, 6)])


def _closure(facets_):
    out = set()
    for f in facets_:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


def _from_facets(facets_, field, seed, weight):
    simp = _closure(facets_)
    X = WeightedComplex({s: 0 for s in simp}, field)
    if seed is None:
        top = max(len(s) for s in simp)
        return X.with_weights({s: weight * (top - len(s) + 1) for s in simp})
    return random_weights(X, seed)


RP2_FACETS = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]


def projective_plane(field: Field = QQ, seed: int | None = None, weight: int = 1):
    """Minimal 6-vertex triangulation of the real projective plane."""
    return _from_facets(RP2_FACETS, field, seed, weight)


TORUS_FACETS = [tuple(sorted({i % 7, (i + 1) % 7, (i + 3) % 7})) for i in range(7)] + \
               [tuple(sorted({i % 7, (i + 2) % 7, (i + 3) % 7})) for i in range(7)]


def torus(field: Field = QQ, seed: int | None = None, weight: int = 1):
    """Moebius' 7-vertex torus."""
    return _from_facets(TORUS_FACETS, field, seed, weight)


def sphere(field: Field = QQ, seed: int | None = None, weight: int = 1):
    """Boundary of the tetrahedron (a 2-sphere)."""
    return _from_facets(list(combinations(range(4), 3)), field, seed, weight)


def filled_triangle(field: Field = QQ, vertex=2, edge=1, face=0):
    w = {(0,): vertex, (1,): vertex, (2,): vertex,
         (0, 1): edge, (0, 2): edge, (1, 2): edge, (0, 1, 2): face}
    return WeightedComplex(w, field)


def hollow_triangle(field: Field = QQ, vertex=0, edge=0):
    w = {(0,): vertex, (1,): vertex, (2,): vertex,
         (0, 1): edge, (0, 2): edge, (1, 2): edge}
    return WeightedComplex(w, field)


FIXTURES = {
    "figure1": figure1,
    "figure2": figure2,
    "projective_plane": projective_plane,
    "torus": torus,
    "sphere": sphere,
}

ALIASES = {"fig1": "fig1", "figure1": "fig1", "fig2": "fig2", "figure2": "fig2",
           "rp2": "rp2", "projective_plane": "rp2", "torus": "torus", "sphere": "sphere"}


def fixture_names() -> list[str]:
    return sorted(set(ALIASES.values()))


def load_fixture(name: str) -> WeightedComplex:
    """Bundled JSON fixture by name (``fig1``, ``fig2``, ``rp2``, ``torus``, ``sphere``)."""
    from importlib.resources import files

    from .complex import load_complex

    key = ALIASES.get(name.removesuffix(".json"))
    if key is None:
        raise KeyError(f"unknown fixture {name!r}")
    return load_complex(files("weighthom").joinpath("data", f"{key}.json").read_text("utf-8"))
