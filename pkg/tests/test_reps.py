"""Oscillator representations as independent oracles for the tables."""

from fractions import Fraction

import numpy as np
import pytest

from drinfeld_forge import (GeneratorId, Scalar, SpecError, build_series,
                            ad_invariance_report, bosonic_rep, casimir_double,
                            casimir_matrix, casimir_quadratic, fermionic_rep,
                            verify_casimir_commutes, verify_rep_homomorphism)
from drinfeld_forge.reps import (ATOL, SparseMatrix, fermion_create,
                                 fermion_annihilate, boson_states,
                                 protected_columns)

FERMIONIC_GRID = [("A", 1), ("A", 2), ("A", 3), ("B", 1), ("B", 2), ("B", 3),
                  ("D", 2), ("D", 3)]
BOSONIC_GRID = [("A", 1), ("A", 2), ("C", 1), ("C", 2)]


def test_fermion_anticommutators():
    n = 3
    eye = SparseMatrix.identity(1 << n, Scalar(1))
    for i in range(1, n + 1):
        ci, ai = fermion_create(n, i), fermion_annihilate(n, i)
        for j in range(1, n + 1):
            cj, aj = fermion_create(n, j), fermion_annihilate(n, j)
            anti = ci @ aj + aj @ ci
            if i == j:
                assert anti == eye
            else:
                assert anti.is_zero()
            assert (ci @ cj + cj @ ci).is_zero()


def test_boson_states_are_cutoff_bounded():
    states = boson_states(2, 3)
    assert all(sum(s) <= 3 for s in states)
    assert len(states) == 10
    assert states == sorted(states)


@pytest.mark.parametrize("series,rank", FERMIONIC_GRID)
def test_fermionic_homomorphism_exact(series, rank):
    alg = build_series(series, rank)
    report = verify_rep_homomorphism(alg, fermionic_rep(alg))
    assert report.passed, report.to_dict()


@pytest.mark.parametrize("series,rank", BOSONIC_GRID)
def test_bosonic_homomorphism_protected(series, rank):
    alg = build_series(series, rank)
    report = verify_rep_homomorphism(alg, bosonic_rep(alg, 6))
    assert report.passed, report.to_dict()
    assert report.details["max_abs_error"] <= ATOL


def test_series_realization_guards():
    with pytest.raises(SpecError):
        fermionic_rep(build_series("C", 1))
    with pytest.raises(SpecError):
        bosonic_rep(build_series("B", 1), 6)
    with pytest.raises(SpecError):
        bosonic_rep(build_series("C", 1), 1)


def test_b1_quadratic_casimir_is_three_quarters_identity():
    alg = build_series("B", 1)
    rep = fermionic_rep(alg)
    cas = casimir_matrix(rep, casimir_quadratic(alg))
    want = SparseMatrix.identity(rep.space_dim, Scalar(Fraction(3, 4)))
    assert cas == want


def test_c1_quadratic_casimir_uniform_diagonal():
    alg = build_series("C", 1)
    rep = bosonic_rep(alg, 6)
    cas = casimir_matrix(rep, casimir_quadratic(alg))
    cols = protected_columns(rep, 2)
    diag = np.diagonal(cas)
    assert max(abs(diag[c] - (-0.75)) for c in cols) <= ATOL


@pytest.mark.parametrize("series,rank", FERMIONIC_GRID)
def test_fermionic_casimir_centrality(series, rank):
    alg = build_series(series, rank)
    rep = fermionic_rep(alg)
    for cas in (casimir_quadratic(alg), casimir_double(alg)):
        report = verify_casimir_commutes(alg, rep, cas)
        assert report.passed, report.to_dict()


@pytest.mark.parametrize("series,rank", BOSONIC_GRID)
def test_bosonic_casimir_centrality(series, rank):
    alg = build_series(series, rank)
    rep = bosonic_rep(alg, 6)
    report = verify_casimir_commutes(alg, rep, casimir_quadratic(alg))
    assert report.passed, report.to_dict()


def test_casimir_ad_invariance_table_level():
    for series, rank in [("A", 2), ("B", 2), ("C", 2), ("D", 2)]:
        alg = build_series(series, rank)
        for cas in (casimir_quadratic(alg), casimir_double(alg)):
            report = ad_invariance_report(alg, cas)
            assert report.passed, (series, rank, cas.label)


def test_custom_central_charges():
    alg = build_series("B", 1)
    rep = fermionic_rep(alg, lambdas={1: Scalar(3)})
    assert rep.matrix(GeneratorId("I", 1)) == SparseMatrix.identity(
        rep.space_dim, Scalar(3))
    assert verify_rep_homomorphism(alg, rep).passed


def test_lambda_out_of_range_rejected():
    alg = build_series("B", 1)
    with pytest.raises(SpecError):
        fermionic_rep(alg, lambdas={7: Scalar(1)})


def test_mutation_breaks_homomorphism():
    from drinfeld_forge import Element, mutate_bracket
    alg = build_series("B", 1)
    u, v = GeneratorId("U", 1), GeneratorId("V", 1)
    wrong = Element.gen(GeneratorId("H", 1)).scale(Scalar(2))
    mutated = mutate_bracket(alg, u, v, wrong)
    report = verify_rep_homomorphism(mutated, fermionic_rep(mutated))
    assert not report.passed


def test_protected_columns_shrink_with_budget():
    alg = build_series("C", 1)
    rep = bosonic_rep(alg, 4)
    all_cols = protected_columns(rep, 0)
    tight = protected_columns(rep, 2)
    assert set(tight) < set(all_cols)
    assert len(all_cols) == rep.space_dim
