import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weighthom.complex import (WeightedComplex, constant_weight, load_complex, random_complex,
                               save_complex, skeleton, validate)
from weighthom.errors import ParseError, ValidationError
from weighthom.fixtures import fixture_names, load_fixture

FIG1_DOC = {
    "names": ["A", "B", "C", "D"],
    "simplices": [
        {"v": [0], "w": 100}, {"v": [1], "w": 100}, {"v": [2], "w": 100}, {"v": [3], "w": 100},
        {"v": [0, 1], "w": 3}, {"v": [1, 2], "w": 4}, {"v": [0, 2], "w": 5},
        {"v": [2, 3], "w": 6}, {"v": [0, 3], "w": 7}, {"v": [1, 3], "w": 8},
        {"v": [0, 1, 2], "w": 2}, {"v": [0, 2, 3], "w": 1},
    ],
}


def test_load_fig1_document(fig1):
    X = load_complex(json.dumps(FIG1_DOC))
    assert X.counts() == [4, 6, 2]
    assert X == fig1
    assert X.weight(X.lookup("AC")) == 5


def test_monotonicity_error_names_pair():
    doc = {"simplices": [{"v": [0], "w": 5}, {"v": [1], "w": 5}, {"v": [2], "w": 5},
                         {"v": [0, 1], "w": 1}, {"v": [0, 2], "w": 5}, {"v": [1, 2], "w": 5},
                         {"v": [0, 1, 2], "w": 2}],
           "names": ["A", "B", "C"]}
    with pytest.raises(ValidationError) as exc:
        load_complex(json.dumps(doc))
    bad = exc.value.violations
    assert len(bad) == 1 and bad[0].kind == "monotonicity"
    assert "AB" in str(bad[0]) and "ABC" in str(bad[0])


def test_empty_document():
    X = load_complex('{"simplices": []}')
    assert len(X) == 0 and X.counts() == []


def test_parse_errors():
    with pytest.raises(ParseError):
        load_complex("{not json")
    with pytest.raises(ParseError):
        load_complex('{"simplices": [{"v": [1, 0], "w": 1}]}')
    with pytest.raises(ParseError):
        load_complex('{"simplices": [{"v": [0], "w": -1}]}')


def test_auto_close_uses_max_coface_weight():
    doc = {"auto_close": True, "simplices": [{"v": [0, 1, 2], "w": 2}, {"v": [0, 1], "w": 4}]}
    X = load_complex(json.dumps(doc))
    assert X.counts() == [3, 3, 1]
    assert X.weight((0, 2)) == 2 and X.weight((0,)) == 4


def test_validate_fixtures(fig1, fig2):
    assert validate(fig1) == []
    assert validate(fig2) == []
    assert len(fig2) == 18


def test_triangle_without_edges():
    X = WeightedComplex({(0,): 0, (1,): 0, (2,): 0, (0, 1, 2): 0})
    bad = validate(X)
    assert len(bad) == 3 and all(v.kind == "closure" for v in bad)


def test_skeleton(fig1):
    S = skeleton(fig1, 1)
    assert S.counts() == [4, 6]
    assert skeleton(fig1, fig1.dim) == fig1
    assert skeleton(fig1, 0).counts() == [4]
    assert all(S.weight(s) == fig1.weight(s) for s in S.weights)


def test_constant_weight(fig1):
    U = constant_weight(fig1, 0)
    assert set(U.weights) == set(fig1.weights)
    assert set(U.weights.values()) == {0}
    assert len(constant_weight(WeightedComplex({}), 5)) == 0


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip(name):
    X = load_fixture(name)
    assert validate(X) == []
    assert load_complex(save_complex(X)) == X


def test_random_complex_contract():
    X = random_complex(1, max_dim=2, budget=10, max_weight=8)
    assert validate(X) == []
    assert random_complex(1, 2, 10, 8) == X
    Y = random_complex(2, max_dim=3, budget=15, max_weight=10)
    assert validate(Y) == []
    assert all(c <= 15 for c in Y.counts())


@given(st.integers(0, 10 ** 6), st.integers(0, 3), st.integers(1, 12), st.integers(0, 10))
def test_random_complexes_valid_and_round_trip(seed, d, budget, wmax):
    X = random_complex(seed, d, budget, wmax)
    assert validate(X) == []
    assert X.dim <= d
    assert max(X.weights.values()) <= wmax
    assert load_complex(save_complex(X)) == X


@given(st.integers(0, 10 ** 6))
def test_skeleton_laws(seed):
    X = random_complex(seed, 3, 10, 8)
    for n in range(X.dim + 1):
        S = skeleton(X, n)
        assert validate(S) == []
        assert S.counts() == X.counts()[:n + 1]
        assert skeleton(S, n) == S
