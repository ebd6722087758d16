import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weighthom.chain import weighted_boundary
from weighthom.complex import constant_weight, random_complex, skeleton
from weighthom.errors import DimensionError, FieldMismatchError, ThetaUndefinedError
from weighthom.fixtures import filled_triangle, hollow_triangle, projective_plane
from weighthom.homology import (ModuleInvariants, field_homology_rank, homology,
                                homology_direct, homology_structure, k_basis, kappa_mu_split,
                                quotient_homology, reference_basis, reference_split,
                                skeleton_quotient_expected, theta_cokernel, theta_injectivity,
                                verify_witness, weight_filtration_report)
from weighthom.ring import Field

F2 = Field.prime(2)


def names(X, simplices):
    return {X.name(s) for s in simplices}


def f_rank(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(A[0]) if A else 0):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


def assert_k_basis_laws(X, n, cycles):
    if n >= 1:
        d = weighted_boundary(X, n)
        idx = X.index(n)
        for b in cycles:
            img = d.apply({idx[s]: c for s, c in b.chain(X.field).items()})
            assert all(not x for x in img.values())
            for m, c in b.coefficients.items():
                assert c.is_monomial()
                assert c.valuation() == X.weight(m) - X.weight(b.kappa) >= 0
    simp = X.simplices(n)
    rows = [[Fraction(b.gamma.get(s, 0)) for s in simp] for b in cycles]
    assert all(b.gamma[b.kappa] == 1 for b in cycles)
    assert f_rank(rows) == len(cycles)


# kappa/mu split and K-basis


def test_fig1_split(fig1):
    split = kappa_mu_split(fig1, 1)
    assert names(fig1, split.kappa) == {"AB", "AC", "BC"}
    assert names(fig1, split.mu) == {"AD", "BD", "CD"}


def test_fig1_split_under_random_orders(fig1):
    rng = random.Random(0)
    for _ in range(20):
        order = list(fig1.simplices(1))
        rng.shuffle(order)
        assert len(kappa_mu_split(fig1, 1, order).kappa) == 3


def test_degree_zero_split(fig1):
    split = kappa_mu_split(fig1, 0)
    assert split.kappa == list(fig1.simplices(0)) and split.mu == []


def test_split_degree_range(fig1):
    with pytest.raises(DimensionError):
        kappa_mu_split(fig1, 3)


def test_fig1_basis_cycles(fig1):
    by = {fig1.name(b.kappa): b for b in k_basis(fig1, 1)}
    ac = by["AC"]
    assert names(fig1, ac.chain(fig1.field)) == {"AC", "CD", "AD"}
    assert {fig1.name(m): d for m, d in ac.degrees().items()} == {"CD": 1, "AD": 2}
    ab = by["AB"]
    assert {fig1.name(m): d for m, d in ab.degrees().items()} == {"AD": 4, "BD": 5}
    assert_k_basis_laws(fig1, 1, list(by.values()))


def test_constant_weight_basis_has_field_coefficients(fig1):
    U = constant_weight(fig1, 3)
    for b in k_basis(U, 1):
        assert all(c.valuation() == 0 for c in b.coefficients.values())


def test_reference_split_agrees_on_fig1(fig1):
    ref = reference_split(fig1, 1)
    assert names(fig1, ref.kappa) == {"AB", "AC", "BC"}
    got = {b.kappa: b.coefficients for b in reference_basis(fig1, ref)}
    assert got == {b.kappa: b.coefficients for b in k_basis(fig1, 1)}


@given(st.integers(0, 10 ** 6))
def test_reference_split_matches_pivot_split(seed):
    X = random_complex(seed, 2, 7, 8)
    for n in range(X.dim + 1):
        order = list(X.simplices(n))
        random.Random(seed).shuffle(order)
        a, b = kappa_mu_split(X, n, order), reference_split(X, n, order)
        assert len(a.kappa) == len(b.kappa)
        assert_k_basis_laws(X, n, reference_basis(X, b))


@given(st.integers(0, 10 ** 6))
def test_k_basis_laws_random(seed):
    X = random_complex(seed, 3, 12, 10)
    for n in range(X.dim + 1):
        assert_k_basis_laws(X, n, k_basis(X, n))


# direct and structure routes


def test_fig1_homology(fig1):
    assert homology_direct(fig1, 1) == ModuleInvariants(1, (1, 4))
    assert str(homology_direct(fig1, 1)) == "R^1 (+) R/(pi^1) (+) R/(pi^4)"
    assert homology_direct(fig1, 2) == ModuleInvariants(0)
    assert field_homology_rank(fig1, 1) == 1


def test_fig1_degree_zero(fig1):
    # vertex weight 100 minus the edges of a maximum spanning tree (BD, AD, CD)
    assert homology_direct(fig1, 0) == ModuleInvariants(1, (92, 93, 94))
    assert homology_structure(fig1, 0)[0] == homology_direct(fig1, 0)


def test_filled_triangle():
    X = filled_triangle(vertex=2, edge=1, face=0)
    assert homology_direct(X, 1) == ModuleInvariants(0, (1,))
    assert homology_structure(X, 1)[0] == ModuleInvariants(0, (1,))


def test_fig1_pairing(fig1):
    inv, pairing = homology_structure(fig1, 1)
    assert inv == ModuleInvariants(1, (1, 4))
    got = {(fig1.name(k), fig1.name(m), e) for k, m, e in pairing.pairs}
    assert got == {("AB", "ABC", 1), ("AC", "ACD", 4)}
    assert names(fig1, pairing.free_kappas) == {"BC"}


def test_constant_weight_has_no_torsion(fig1, rp2):
    for X in (fig1, rp2):
        U = constant_weight(X, 2)
        for n in range(U.dim + 1):
            inv, pairing = homology_structure(U, n)
            assert inv.torsion == () and all(e == 0 for _, _, e in pairing.pairs)


def test_constant_weight_equals_homology_over_r(rp2):
    # over a field of characteristic 0 the 2-torsion of RP^2 is invisible
    U = constant_weight(rp2, 0)
    assert homology(U) == [ModuleInvariants(1), ModuleInvariants(0), ModuleInvariants(0)]
    U2 = U.with_field(F2)
    assert homology(U2) == [ModuleInvariants(1), ModuleInvariants(1), ModuleInvariants(1)]


def test_field_rank_examples(fig2):
    assert field_homology_rank(fig2, 2) == 1
    assert field_homology_rank(hollow_triangle(), 1) == 1


@given(st.integers(0, 10 ** 6))
def test_routes_agree(seed):
    X = random_complex(seed, 3, 12, 10)
    for n in range(X.dim + 1):
        d = homology_direct(X, n)
        s, pairing = homology_structure(X, n)
        assert s == d
        assert d.rank == field_homology_rank(X, n)
        assert len(pairing.free_kappas) == d.rank


@given(st.integers(0, 10 ** 6))
def test_rank_law_over_f2(seed):
    X = random_complex(seed, 3, 12, 10, field=F2)
    for n in range(X.dim + 1):
        assert homology_direct(X, n).rank == field_homology_rank(X, n)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_invariants_are_order_independent(seed, oseed):
    X = random_complex(seed, 2, 10, 8)
    rng = random.Random(oseed)
    for n in range(X.dim + 1):
        order = list(X.simplices(n))
        rng.shuffle(order)
        assert len(kappa_mu_split(X, n, order).kappa) == len(kappa_mu_split(X, n).kappa)
        assert homology_direct(X, n, order) == homology_direct(X, n)
        assert homology_structure(X, n, order)[0] == homology_direct(X, n)


# quotients


def test_skeleton_quotient_fig1(fig1):
    S = skeleton(fig1, 1)
    assert quotient_homology(S, 0, 1) == ModuleInvariants(0, (3, 4, 5))
    assert skeleton_quotient_expected(fig1, 1) == ModuleInvariants(0, (3, 4, 5))


def test_quotient_by_identity_is_zero(fig1):
    for n in range(3):
        assert quotient_homology(fig1, fig1.weights, n).is_zero


def test_full_fig1_quotient_is_theta_cokernel(fig1):
    q = quotient_homology(fig1, 0, 1)
    assert q == theta_cokernel(fig1, 0, 1)
    assert q == ModuleInvariants(0, (1, 4, 4))


def test_quotient_needs_smaller_weight(fig1):
    with pytest.raises(ThetaUndefinedError):
        quotient_homology(fig1, 1000, 1)


@given(st.integers(0, 10 ** 6))
def test_skeleton_quotient_law(seed):
    X = random_complex(seed, 3, 10, 10)
    for n in range(X.dim + 1):
        got = quotient_homology(skeleton(X, n), 0, n)
        want = sorted(X.weight(k) for k in kappa_mu_split(X, n).kappa if X.weight(k) > 0)
        assert got == ModuleInvariants(0, tuple(want))


@given(st.integers(0, 10 ** 6))
def test_quotient_equals_cokernel(seed):
    X = random_complex(seed, 2, 8, 8)
    for n in range(X.dim + 1):
        assert quotient_homology(X, 0, n) == theta_cokernel(X, 0, n)


# theta injectivity


def test_projective_plane_not_injective(rp2):
    v = theta_injectivity(rp2, 1)
    assert not v.injective and v.integral_torsion == [2] and v.order == 2
    assert verify_witness(rp2, v)


def test_projective_plane_any_weights():
    for seed in range(5):
        X = projective_plane(seed=seed)
        v = theta_injectivity(X, 1)
        assert not v.injective and verify_witness(X, v)


def test_injective_fixtures(fig1, sph, tor):
    assert theta_injectivity(fig1, 1).injective
    for n in (1, 2):
        assert theta_injectivity(sph, n).injective
        assert theta_injectivity(tor, n).injective


def test_theta_injectivity_needs_rationals(fig1):
    with pytest.raises(FieldMismatchError):
        theta_injectivity(fig1.with_field(F2), 1)


# weight filtration


def test_filtration_fig1(fig1):
    rep = weight_filtration_report(fig1)
    assert rep.ok
    last = rep.steps[-1]
    assert last.invariants == [homology_direct(fig1, n) for n in range(3)]


def test_filtration_constant_weight(fig1):
    rep = weight_filtration_report(constant_weight(fig1, 0))
    assert rep.ok
    assert len({tuple(s.invariants) for s in rep.steps}) == 1


@given(st.integers(0, 10 ** 6))
def test_filtration_rank_identities(seed):
    assert weight_filtration_report(random_complex(seed, 3, 8, 10)).ok
