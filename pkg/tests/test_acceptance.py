"""Acceptance gate: twelve criteria, one test (and one pass/fail line
under pytest -v) per criterion.

Criteria 1-6 and 12 are quick; criteria 7-11 share one full arity-7 run
through a session-scoped fixture (several minutes of dense modular
elimination).
"""

import math
import random
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from tortkara import expansion, lattice, linalg, modp, pipeline, symrep, ternary, words
from tortkara.linalg import QQ, ZZ, ExactMatrix


@pytest.fixture(scope="session")
def arity5_report():
    return pipeline.run_arity5()


@pytest.fixture(scope="session")
def arity7_report():
    return pipeline.run_arity7()


def test_criterion_01_znf_golden_formulas():
    """All 14 arity-5 association-type normal forms match the closed
    formulas (with the corrected a(b((cd)e)) line); exact."""

    def pos(w, x):
        return w.index(x)

    preds = [
        lambda w: True,
        lambda w: pos(w, 1) < pos(w, 2),
        lambda w: pos(w, 2) < pos(w, 3),
        lambda w: pos(w, 1) < pos(w, 2) and pos(w, 1) < pos(w, 3),
        lambda w: pos(w, 1) < pos(w, 2) < pos(w, 3),
        lambda w: pos(w, 3) < pos(w, 4),
        lambda w: pos(w, 1) < pos(w, 2) and pos(w, 3) < pos(w, 4),
        lambda w: pos(w, 2) < pos(w, 3) and pos(w, 2) < pos(w, 4),
        lambda w: pos(w, 2) < pos(w, 3) < pos(w, 4),
    ]
    expected = [
        sorted((0,) + p for p in permutations((1, 2, 3, 4)) if pred((0,) + p))
        for pred in preds
    ]
    expected += [
        sorted((0, 1) + p for p in permutations((2, 3, 4)) if pred((0, 1) + p))
        for pred in (lambda w: True, lambda w: pos(w, 2) < pos(w, 3), lambda w: pos(w, 3) < pos(w, 4))
    ]
    expected.append([(0, 1, 2, 3, 4), (0, 1, 2, 4, 3)])  # corrected line
    expected.append([(0, 1, 2, 3, 4)])
    table = words.normal_form_table(5)
    assert len(table) == 14
    for (mono, el), want in zip(table, expected):
        assert sorted(w for w, c in el.terms()) == want
        assert all(c == 1 for _, c in el.terms())


def test_criterion_02_sign_matrices_bit_for_bit():
    """The two 5x24 +- grids of the base arity-5 expansions."""
    assert expansion.sign_matrix_string(expansion.expand(((0, 1, 2), 3, 4))) == [
        "++++++++++++++++++++++++",
        "------------------------",
        "------++++++--++-+--++-+",
        "------++++++++--+---+++-",
        "------++++++++--+-++---+",
    ]
    assert expansion.sign_matrix_string(expansion.expand((0, 1, (2, 3, 4)))) == [
        "++---+++++++-------+--++",
        "--+++-------+++++++-++--",
        "------++++++--++-+--++-+",
        "++++++------++--+-++--+-",
        "+-++---+--++++--+---++-+",
    ]


def test_criterion_03_sanity_identities():
    """E3 nullity 0; tortkara identity residual 0 in Zinb(4);
    anticommutator associativity residual 0 in Zinb(3); expand of the
    14-term relation 0 in Zinb(5). Exact."""
    checks = pipeline.sanity_checks()
    assert checks == {
        "e3_nullity_zero": True,
        "tortkara_identity": True,
        "anticommutator_associative": True,
        "relation_expands_to_zero": True,
    }


def test_criterion_04_e5_rank_and_nullity():
    """E5 is 120 x 90 with rank 60 / nullity 30 over Q and mod 101."""
    e5 = expansion.expansion_matrix(5)
    assert e5.shape == (120, 90)
    m = ExactMatrix(QQ, [[Fraction(int(x)) for x in row] for row in e5])
    _, rank_q = linalg.rcf(m)
    assert rank_q == 60
    assert linalg.nullspace(m).nrows == 30
    assert modp.rank(expansion.expansion_matrix(5, 101), 101) == 60


def test_criterion_05_lll_run(arity5_report):
    """Reduced shortest vector: squared length 14, 14 terms; closure of
    that vector equals nullspace(E5).  The integer-basis measure is
    convention dependent: accept 40.847 +- 0.01, otherwise require
    row-space equality plus reduced measure <= 36.0 (and report)."""
    r = arity5_report
    if not math.isclose(r.measure_hnf, 40.847, abs_tol=0.01):
        # convention fallback: this implementation's Euclidean HNF yields a
        # different (valid) nullspace basis; the reduced basis is tight
        assert r.closure_equals_nullspace
        assert r.measure_lll["999/1000"] <= 36.0
    assert r.shortest_sq_length == 14
    assert r.shortest_terms == 14
    assert r.closure_rank == 30
    assert r.closure_equals_nullspace


def test_criterion_06_character_and_multiplicities(arity5_report):
    """Character [30,-6,2,0,0,0,0]; multiplicities (1,1,2,2,1) for
    ([221],[311],[32],[41],[5]) in the published labeling convention,
    which is the conjugate of the standard one (the computed module
    contains the sign representation, not the trivial one)."""
    r = arity5_report
    assert r.character == [30, -6, 2, 0, 0, 0, 0]
    wanted = [(2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)]
    assert [r.conjugate_decomposition.get(lam, 0) for lam in wanted] == [1, 1, 2, 2, 1]
    # dimension audit in either labeling
    assert sum(m * symrep.dimension(lam) for lam, m in r.decomposition.items()) == 30


def test_criterion_07_arity7_dimensions(arity7_report):
    """|SkewTS(7)| = 7560; closure ranks 1785, 2730, 3150, 3150, 3150,
    4410, 4410, 4794; rank(E7) = 2520; nullity 5040; dim New = 246."""
    r = arity7_report
    assert r.basis_size == 7560
    assert r.con_ranks == [1785, 2730, 3150, 3150, 3150, 4410, 4410, 4794]
    assert r.dim_con == 4794
    assert r.expansion_rank == 2520
    assert r.nullity == 5040
    assert r.dim_new == 246


def test_criterion_08_filtration(arity7_report):
    """Nullspace RCF row weights min 17 / max 1397; first new generator:
    60 terms, lifted coefficients {+-1, +-2}; rank sequence
    4794 -> 4900 -> 4970 -> 5040 in at most 3 generators."""
    r = arity7_report
    assert (r.row_weight_min, r.row_weight_max) == (17, 1397)
    assert r.filtration[0]["terms"] == 60
    assert set(r.generator_coefficients) <= {-2, -1, 1, 2}
    ranks = [f["rank"] for f in r.filtration]
    assert ranks[0] == 4900
    assert ranks[-1] == 5040
    assert len(ranks) <= 3
    assert ranks == sorted(ranks)
    assert 4970 in ranks


def test_criterion_09_bundled_relation(arity7_report):
    """The bundled 60-term relation: 60 terms, integer expansion exactly
    zero, rank 4900 when adjoined to Con(7)."""
    rel = pipeline.new_arity7_relation()
    assert rel.term_count() == 60
    assert set(rel.coeffs.values()) <= {-2, -1, 1, 2}
    assert expansion.expand_element(rel).is_zero()
    assert arity7_report.bundled_rank == 4900


def test_criterion_10_representation_tables(arity7_report):
    """Stacked-rank rows reproduced exactly; the nullity row matches the
    published values except at 41^3 / 3^21 / 32^2, where the computed
    values must satisfy the dimension audits and must be flagged."""
    r = arity7_report
    for name in ("sym", "symcon", "symconnew", "exp"):
        assert r.tables[name] == list(pipeline.REFERENCE_TABLES[name]), name
    dims = [symrep.dimension(lam) for lam in pipeline.TABLE_PARTITIONS]
    assert sum(e * d for e, d in zip(r.tables["exp"], dims)) == 2520
    # nul row: agree everywhere except the three inconsistent entries
    expected_mismatch = {"41^3": 110, "3^21": 116, "32^2": 115}
    for lam, got, ref in zip(
        pipeline.TABLE_PARTITIONS, r.tables["nul"], pipeline.REFERENCE_TABLES["nul"]
    ):
        label = symrep.partition_label(lam)
        if label in expected_mismatch:
            assert got == expected_mismatch[label]
        else:
            assert got == ref
    assert sum((nu - s) * d for s, nu, d in zip(r.tables["sym"], r.tables["nul"], dims)) == 5040
    flagged = {m["partition"] for m in r.reference_mismatches}
    assert flagged == set(expected_mismatch)
    assert r.second_prime_agrees


def test_criterion_11_decompositions(arity7_report):
    """ConNew/Con = [421]+[322]+[3211]+[31111] (dim 106); All/Con has
    multiplicities (1,2,2,1,2,2) at [511],[421],[4111],[322],[3211],[31111]
    (dim 246). Exact."""
    r = arity7_report
    connew = dict(zip(r.table_partitions, r.multiplicities["connew_over_con"]))
    assert {k: v for k, v in connew.items() if v} == {
        "421": 1,
        "32^2": 1,
        "321^2": 1,
        "31^4": 1,
    }
    assert r.quotient_dims["connew_over_con"] == 106
    allcon = dict(zip(r.table_partitions, r.multiplicities["all_over_con"]))
    assert {k: v for k, v in allcon.items() if v} == {
        "51^2": 1,
        "421": 2,
        "41^3": 2,
        "32^2": 1,
        "321^2": 2,
        "31^4": 2,
    }
    assert r.quotient_dims["all_over_con"] == 246


def test_criterion_12_property_suites():
    """Standalone property checks: expand equivariance (200 random
    pairs), action axiom, straighten idempotence, HNF unimodularity, LLL
    lattice preservation, character orthogonality, rep homomorphism."""
    rng = random.Random(2024)
    basis5 = ternary.skew_basis(5)

    # equivariance of expand on 200 random (monomial, permutation) pairs
    for _ in range(200):
        idx = rng.randrange(90)
        sigma = tuple(rng.sample(range(5), 5))
        m = basis5[idx]
        left = expansion.expand_element(
            ternary.act(sigma, ternary.SkewElement.from_terms(5, [(m, 1)]))
        )
        right = words.ZinbielElement.from_terms(
            5, ((tuple(sigma[v] for v in w), c) for w, c in expansion.expand(m).terms())
        )
        assert left.coeffs == right.coeffs

    # action axiom and straighten idempotence
    for _ in range(100):
        sigma = tuple(rng.sample(range(5), 5))
        tau = tuple(rng.sample(range(5), 5))
        x = ternary.SkewElement.from_terms(5, [(basis5[rng.randrange(90)], 1)])
        composed = tuple(sigma[tau[i]] for i in range(5))
        assert ternary.act(sigma, ternary.act(tau, x)).coeffs == ternary.act(composed, x).coeffs
    for m in basis5:
        assert ternary.straighten(m) == (1, m)

    # HNF unimodularity on random integer matrices
    for _ in range(20):
        rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        h, u = linalg.hnf_transform(ExactMatrix(ZZ, rows))
        assert abs(linalg.det_unimodular(u)) == 1
        for i in range(4):
            for j in range(4):
                assert sum(u.data[i][k] * rows[k][j] for k in range(4)) == h.data[i][j]

    # LLL lattice preservation on random full-rank bases
    done = 0
    while done < 10:
        rows = [[rng.randint(-15, 15) for _ in range(4)] for _ in range(3)]
        m = ExactMatrix(QQ, [[Fraction(x) for x in r] for r in rows])
        if linalg.rcf(m)[1] != 3:
            continue
        reduced = lattice.lll([r[:] for r in rows], Fraction(3, 4))
        assert lattice.is_reduced(reduced, Fraction(3, 4))
        h1, _ = linalg.hnf_transform(ExactMatrix(ZZ, rows))
        h2, _ = linalg.hnf_transform(ExactMatrix(ZZ, reduced))
        assert h1.data == h2.data
        done += 1

    # character orthogonality (exact) and rep homomorphism (100 pairs)
    classes = symrep.cycle_types(5)
    sizes = [symrep.class_size(mu) for mu in classes]
    chars = {lam: symrep.character(lam) for lam in symrep.partitions(5)}
    for lam in symrep.partitions(5):
        for mu in symrep.partitions(5):
            dot = sum(s * a * b for s, a, b in zip(sizes, chars[lam], chars[mu]))
            assert dot == (120 if lam == mu else 0)
    lam = (3, 2)
    for _ in range(100):
        sigma = tuple(rng.sample(range(5), 5))
        tau = tuple(rng.sample(range(5), 5))
        a = symrep.rep_matrix_modp(lam, sigma, 101)
        b = symrep.rep_matrix_modp(lam, tau, 101)
        composed = tuple(sigma[tau[i]] for i in range(5))
        assert np.array_equal(a @ b % 101, symrep.rep_matrix_modp(lam, composed, 101))
