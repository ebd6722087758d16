import pytest
from hypothesis import given
from hypothesis import strategies as st

from weighthom.chain import (check_chain_complex, check_naturality, check_theta_composition,
                             theta, weighted_boundary)
from weighthom.complex import constant_weight, random_complex, random_subweight
from weighthom.errors import DimensionError, ThetaUndefinedError
from weighthom.fixtures import filled_triangle
from weighthom.ring import QQ, LocalElement, parse

PI = LocalElement.pi_power


def entry(X, M, row, col):
    return M.get(M.rows.index(X.lookup(row)), M.col_labels.index(X.lookup(col)))


def test_fig1_triangle_column(fig1):
    d2 = weighted_boundary(fig1, 2)
    assert entry(fig1, d2, "AB", "ABC") == parse("pi")
    assert entry(fig1, d2, "AC", "ABC") == parse("-pi^3")
    assert entry(fig1, d2, "BC", "ABC") == parse("pi^2")
    assert len(d2.column(d2.col_labels.index(fig1.lookup("ABC")))) == 3


def test_constant_weight_gives_classical_signs(fig1):
    U = constant_weight(fig1, 0)
    for n in (1, 2):
        d = weighted_boundary(U, n)
        for col in d.cols:
            assert all(x in (LocalElement.one(), -LocalElement.one()) for x in col.values())


def test_filled_triangle_entries_are_pi():
    X = filled_triangle(vertex=2, edge=1, face=0)
    for n in (1, 2):
        for col in weighted_boundary(X, n).cols:
            assert all(x.valuation() == 1 and x.unit_part().residue() in (1, -1)
                       for x in col.values())


def test_boundary_degree_range(fig1):
    with pytest.raises(DimensionError):
        weighted_boundary(fig1, 0)
    with pytest.raises(DimensionError):
        weighted_boundary(fig1, 3)


def test_fig1_theta_diagonal(fig1):
    T = theta(fig1, 0, None, 1)
    want = {"AB": 3, "AC": 5, "BC": 4, "AD": 7, "BD": 8, "CD": 6}
    for name, e in want.items():
        s = fig1.lookup(name)
        i = T.rows.index(s)
        assert T.get(i, T.col_labels.index(s)) == PI(QQ, e)
    assert T.nnz() == 6


def test_theta_identity_when_equal(fig1):
    for n in range(3):
        T = theta(fig1, fig1.weights, None, n)
        assert all(c == {j: LocalElement.one()} for j, c in enumerate(T.cols))


def test_theta_outside_ring(fig1):
    wp = dict(fig1.weights)
    wp[fig1.lookup("AB")] = 5
    with pytest.raises(ThetaUndefinedError):
        theta(fig1, wp, None, 1)


def test_fixture_chain_identities(fig1, fig2):
    assert check_chain_complex(fig1)
    assert check_chain_complex(fig2)
    assert check_naturality(fig1, 0)
    assert check_naturality(fig1, fig1.weights)


def test_chain_condition_on_many_random_complexes():
    for seed in range(500):
        assert check_chain_complex(random_complex(seed, 3, 8, 10))


@given(st.integers(0, 10 ** 6))
def test_entries_are_signed_monomials(seed):
    X = random_complex(seed, 3, 10, 10)
    for n in range(1, X.dim + 1):
        d = weighted_boundary(X, n)
        for j, col in enumerate(d.cols):
            s = d.col_labels[j]
            for i, x in col.items():
                assert x.is_monomial()
                assert x.valuation() == X.weight(d.rows[i]) - X.weight(s) >= 0
                assert x.unit_part().residue() in (1, -1)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_naturality_random_pairs(seed, wseed):
    X = random_complex(seed, 3, 10, 10)
    assert check_naturality(X, random_subweight(X, wseed))


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_theta_composition(seed, a, b):
    X = random_complex(seed, 2, 8, 10)
    w2 = random_subweight(X, a)
    w1 = random_subweight(X.with_weights(w2), b)
    assert check_theta_composition(X, w1, w2, X.weights)
