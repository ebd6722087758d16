import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weighthom.bistructure import random_structure
from weighthom.errors import OracleLimitError
from weighthom.homology import cycle_matrix, kappa_mu_split
from weighthom.linalg import SparseMatrix, integer_snf
from weighthom.oracle import (check_case, differential_run, integer_homology,
                              minor_valuation_invariants, naive_invariant_factors, naive_loops,
                              summary)
from weighthom.ring import QQ, LocalElement

PI = LocalElement.pi_power


def test_minor_oracle_diag():
    M = SparseMatrix.from_dense(QQ, [[PI(QQ, 1), 0], [0, PI(QQ, 4)]])
    assert minor_valuation_invariants(M) == [1, 4]


def test_minor_oracle_fig1_cycle_matrix(fig1):
    B = cycle_matrix(fig1, 1, kappa_mu_split(fig1, 1).kappa).to_sparse()
    assert minor_valuation_invariants(B) == [1, 4]


def test_minor_oracle_limit():
    M = SparseMatrix.from_dense(QQ, [[1] * 11])
    with pytest.raises(OracleLimitError):
        minor_valuation_invariants(M)


def test_integer_homology_examples(rp2, fig1, sph, tor):
    assert integer_homology(rp2, 1) == (0, [2])
    assert integer_homology(fig1, 1) == (1, [])
    assert integer_homology(sph, 2) == (1, [])
    assert integer_homology(tor, 1) == (2, [])


def test_naive_factors_handle_sign_oscillation():
    assert naive_invariant_factors([[-4, 6, 1, 2], [1, 1, -4, -1]]) == [1, 1]


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_naive_factors_agree_with_integer_snf(A):
    assert naive_invariant_factors(A) == integer_snf(A)


def test_differential_run_small():
    reports = differential_run(7, 25)
    assert all(r.verdict == "match" for r in reports)
    assert [r.to_dict() for r in reports] == [r.to_dict() for r in differential_run(7, 25)]
    doc = json.loads(summary(reports))
    assert doc == {"cases": 25, "mismatches": []}


def test_injected_fault_is_detected():
    reports = differential_run(7, 6, fault_case=3)
    bad = [r.case for r in reports if r.verdict != "match"]
    assert bad == [3]
    assert "mismatch" in reports[3].line()


def test_check_case_fixture(fig1):
    rep = check_case(fig1)
    assert rep.verdict == "match" and all(rep.checks.values())


@given(st.integers(1, 30), st.integers(0, 10 ** 6))
def test_naive_loops_cover_every_position(length, seed):
    rng = random.Random(seed)
    s = random_structure(rng, length)
    sets = naive_loops(length, s.arcs)
    assert len(sets) == len(s.arcs) + 1
    assert set().union(*sets) == set(range(1, length + 1))
