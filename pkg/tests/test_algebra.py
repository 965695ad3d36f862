"""Series construction, bracket identities, and structural invariants."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_forge import (ClosureError, Element, ForeignGeneratorError,
                            GeneratorId, ONE, RankError, Scalar, build_series,
                            cartan_count, dimension, enumerate_generators,
                            mirror, mutate_bracket, parse_label,
                            positive_roots, shift_generator,
                            validate_series_rank, verify_jacobi)

JACOBI_GRID = ([("A", r) for r in (1, 2, 3, 4)]
               + [("B", r) for r in (1, 2, 3)]
               + [("C", r) for r in (1, 2, 3)]
               + [("D", r) for r in (2, 3, 4)])

SMALL_GRID = [("A", 1), ("A", 2), ("B", 1), ("B", 2), ("C", 1), ("C", 2),
              ("D", 2), ("D", 3)]


def hgen(i):
    return GeneratorId("H", i)


@pytest.mark.parametrize("series,rank,dim", [
    ("A", 1, 6), ("A", 2, 12), ("B", 1, 4), ("B", 2, 12), ("B", 3, 24),
    ("C", 1, 4), ("C", 2, 12), ("C", 3, 24), ("D", 2, 8), ("D", 3, 18),
])
def test_dimensions(series, rank, dim):
    assert dimension(series, rank) == dim
    assert build_series(series, rank).dim == dim


def test_d_series_needs_rank_two():
    with pytest.raises(RankError):
        validate_series_rank("D", 1)
    with pytest.raises(RankError):
        build_series("D", 1)
    with pytest.raises(RankError):
        validate_series_rank("A", 0)


def test_basis_order_blocks():
    alg = build_series("B", 2)
    kinds = [gid.kind for gid in alg.basis]
    assert kinds[:2] == ["H", "H"]
    assert kinds[2:4] == ["I", "I"]
    positives = positive_roots("B", 2)
    assert [g.kind for g in positives] == ["F", "S", "U", "U"]
    mirrored = [mirror(g) for g in positives]
    assert list(alg.basis[4:8]) == positives
    assert list(alg.basis[8:]) == mirrored


def test_labels_round_trip():
    for series, rank in SMALL_GRID:
        for gid in build_series(series, rank).basis:
            assert parse_label(gid.label) == gid


@pytest.mark.parametrize("series,rank", JACOBI_GRID)
def test_jacobi(series, rank):
    report = verify_jacobi(build_series(series, rank))
    assert report.passed, report.to_dict()


def test_bracket_oracles():
    alg = build_series("A", 1)
    f12, f21 = GeneratorId("F", 1, 2), GeneratorId("F", 2, 1)
    out = alg.bracket_gens(f12, f21)
    assert out == Element.gen(hgen(1)) - Element.gen(hgen(2))
    assert alg.bracket_gens(hgen(1), f12) == Element.gen(f12)

    c = build_series("C", 1)
    p, q = GeneratorId("P", 1, 1), GeneratorId("Q", 1, 1)
    assert c.bracket_gens(hgen(1), p) == Element.gen(p).scale(Scalar(2))
    assert c.bracket_gens(p, q) == Element.gen(hgen(1)).scale(Scalar(2))

    b = build_series("B", 1)
    u, v = GeneratorId("U", 1), GeneratorId("V", 1)
    assert b.bracket_gens(u, v) == Element.gen(hgen(1))
    assert b.bracket_gens(u, u).is_zero()

    d = build_series("D", 2)
    s, t = GeneratorId("S", 1, 2), GeneratorId("T", 1, 2)
    assert d.bracket_gens(s, t) == Element.gen(hgen(1)) + Element.gen(hgen(2))


def test_sp_diagonal_collision_rule():
    # the creation index of F wins both matrix-unit collisions
    c = build_series("C", 2)
    f12 = GeneratorId("F", 1, 2)
    out = c.bracket_gens(f12, GeneratorId("P", 2, 2))
    assert out == Element.gen(GeneratorId("P", 1, 2)).scale(Scalar(0, 0, 1))


def test_centrals_commute():
    for series, rank in SMALL_GRID:
        alg = build_series(series, rank)
        for i in range(1, alg.n_indices + 1):
            ic = GeneratorId("I", i)
            for gid in alg.basis:
                assert alg.bracket_gens(ic, gid).is_zero()


def test_antisymmetry_and_linearity():
    alg = build_series("C", 2)
    for p, q in itertools.combinations(alg.basis, 2):
        assert alg.bracket_gens(p, q) == -alg.bracket_gens(q, p)
    a = Element.gen(GeneratorId("P", 1, 2)).scale(Scalar(3))
    b = Element.gen(GeneratorId("Q", 1, 1))
    b.add_term(GeneratorId("H", 2), Scalar(0, 1))
    lhs = alg.bracket(a, b)
    rhs = (alg.bracket_gens(GeneratorId("P", 1, 2), GeneratorId("Q", 1, 1))
           .scale(Scalar(3))
           + alg.bracket_gens(GeneratorId("P", 1, 2), GeneratorId("H", 2))
           .scale(Scalar(0, 3)))
    assert lhs == rhs


def test_weight_grading():
    for series, rank in SMALL_GRID:
        alg = build_series(series, rank)
        for gid in alg.basis:
            w = alg.weight_of(gid)
            for k in range(1, alg.n_indices + 1):
                out = alg.bracket_gens(hgen(k), gid)
                want = Element.gen(gid).scale(Scalar(w[k - 1]))
                assert out == want, (series, rank, gid.label, k)


def test_mirror_is_an_involution():
    for series, rank in SMALL_GRID:
        for root in positive_roots(series, rank):
            assert mirror(mirror(root)) == root


def test_enumerate_matches_dimension():
    for series, rank in SMALL_GRID:
        basis = enumerate_generators(series, rank)
        assert len(basis) == dimension(series, rank)
        assert len(set(basis)) == len(basis)


def test_foreign_generator_rejected():
    alg = build_series("A", 1)
    with pytest.raises(ForeignGeneratorError):
        alg.bracket_gens(GeneratorId("P", 1, 1), hgen(1))


def test_mutation_breaks_jacobi():
    # trace direction instead of the Cartan difference
    alg = build_series("A", 2)
    f12, f21 = GeneratorId("F", 1, 2), GeneratorId("F", 2, 1)
    target = Element.gen(hgen(1)) + Element.gen(hgen(2))
    mutated = mutate_bracket(alg, f12, f21, target)
    assert not verify_jacobi(mutated).passed
    # the original instance is untouched
    assert verify_jacobi(alg).passed


def test_weight_mutation_breaks_jacobi():
    alg = build_series("A", 1)
    f12 = GeneratorId("F", 1, 2)
    mutated = mutate_bracket(alg, hgen(1), f12,
                             Element.gen(f12).scale(Scalar(2)))
    assert not verify_jacobi(mutated).passed


def test_mutation_is_orientation_normalized():
    alg = build_series("A", 1)
    f12, f21 = GeneratorId("F", 1, 2), GeneratorId("F", 2, 1)
    target = Element.gen(hgen(1))
    mutated = mutate_bracket(alg, f21, f12, target)
    assert mutated.bracket_gens(f21, f12) == target
    assert mutated.bracket_gens(f12, f21) == -target


def test_restrict_requires_closure():
    alg = build_series("B", 2)
    keep = [gid for gid in alg.basis if gid.kind in ("H", "U")]
    with pytest.raises(ClosureError):
        alg.restrict(keep)


def test_restrict_keeps_subtable():
    alg = build_series("A", 2)
    keep = [gid for gid in alg.basis if gid.kind in ("H", "F")]
    sub = alg.restrict(keep)
    assert sub.dim == len(keep)
    f12, f23 = GeneratorId("F", 1, 2), GeneratorId("F", 2, 3)
    assert sub.bracket_gens(f12, f23) == alg.bracket_gens(f12, f23)


def test_identity_injection_embeds_brackets():
    # rank n tables sit inside rank n+1 verbatim, for every series
    for series, rank in [("A", 2), ("B", 1), ("C", 2), ("D", 2)]:
        small = build_series(series, rank)
        big = build_series(series, rank + 1)
        for a, b in itertools.combinations(small.basis, 2):
            assert big.bracket_gens(a, b) == small.bracket_gens(a, b)


def test_shift_generator():
    assert shift_generator(GeneratorId("F", 1, 3), 1) == GeneratorId("F", 2, 4)
    assert shift_generator(GeneratorId("U", 2), 2) == GeneratorId("U", 4)
    assert shift_generator(hgen(1), 1) == hgen(2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_GRID), st.data())
def test_jacobi_identity_random_triples(grid_point, data):
    series, rank = grid_point
    alg = build_series(series, rank)
    pick = st.sampled_from(list(alg.basis))
    x, y, z = data.draw(pick), data.draw(pick), data.draw(pick)
    total = (alg.bracket(alg.bracket_gens(x, y), Element.gen(z))
             + alg.bracket(alg.bracket_gens(y, z), Element.gen(x))
             + alg.bracket(alg.bracket_gens(z, x), Element.gen(y)))
    assert total.is_zero()
