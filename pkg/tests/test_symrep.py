"""Partitions, characters, and irreducible representation matrices."""

import random
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tortkara import symrep
from tortkara.symrep import (
    CharacterTable,
    character,
    class_representative,
    class_size,
    conjugate,
    cycle_types,
    dimension,
    mn_character,
    parse_partition,
    partition_label,
    partitions,
    rep_matrix_exact,
    rep_matrix_modp,
    stacked_rank,
)


def test_partitions_order_and_count():
    p5 = partitions(5)
    assert len(p5) == 7
    assert p5[0] == (5,) and p5[-1] == (1, 1, 1, 1, 1)
    p7 = partitions(7)
    assert len(p7) == 15
    labels = [partition_label(lam) for lam in p7]
    assert labels == [
        "7", "61", "52", "51^2", "43", "421", "41^3", "3^21",
        "32^2", "321^2", "31^4", "2^31", "2^21^3", "21^5", "1^7",
    ]


def test_dimensions():
    assert dimension((4, 2, 1)) == 35
    assert dimension((3, 2, 2)) == 21
    assert dimension((3, 2, 1, 1)) == 35
    assert dimension((3, 1, 1, 1, 1)) == 15
    assert sum(dimension(lam) ** 2 for lam in partitions(7)) == 5040


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate((7,)) == (1,) * 7
    for lam in partitions(7):
        assert conjugate(conjugate(lam)) == lam


def test_parse_partition():
    assert parse_partition("4,2,1") == (4, 2, 1)
    assert parse_partition("3^21") == (3, 3, 1)
    with pytest.raises(Exception):
        parse_partition("1,2")


def test_trivial_and_sign_characters():
    assert character((5,)) == [1] * 7
    sign = character((1, 1, 1, 1, 1))
    classes = cycle_types(5)
    transposition = classes.index((2, 1, 1, 1))
    assert sign[transposition] == -1


def test_character_orthogonality():
    for n in (5, 7):
        classes = cycle_types(n)
        sizes = [class_size(mu) for mu in classes]
        chars = {lam: character(lam) for lam in partitions(n)}
        for lam in partitions(n):
            for mu in partitions(n):
                dot = sum(
                    s * a * b for s, a, b in zip(sizes, chars[lam], chars[mu])
                )
                assert dot == (factorial(n) if lam == mu else 0)


def test_class_sizes_sum():
    assert sum(class_size(mu) for mu in cycle_types(7)) == 5040


def test_decompose_regular_character():
    table = CharacterTable(5)
    regular = [120] + [0] * 6
    decomp = table.decompose(regular)
    assert decomp == {lam: dimension(lam) for lam in partitions(5)}


def test_rep_identity_and_traces():
    for lam in [(4, 1), (3, 2), (2, 2, 1)]:
        d = dimension(lam)
        ident = rep_matrix_exact(lam, tuple(range(5)))
        assert [list(row) for row in ident] == [
            [Fraction(int(i == j)) for j in range(d)] for i in range(d)
        ]
    # trace of a transposition in [41] equals the character value 2
    tr = sum(rep_matrix_exact((4, 1), (1, 0, 2, 3, 4))[i][i] for i in range(4))
    classes = cycle_types(5)
    assert tr == character((4, 1))[classes.index((2, 1, 1, 1))] == 2


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(5)), st.permutations(range(5)))
def test_rep_homomorphism(sigma, tau):
    sigma, tau = tuple(sigma), tuple(tau)
    lam = (3, 2)
    p = 101
    a = rep_matrix_modp(lam, sigma, p)
    b = rep_matrix_modp(lam, tau, p)
    composed = tuple(sigma[tau[i]] for i in range(5))
    assert np.array_equal(a @ b % p, rep_matrix_modp(lam, composed, p))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(5)))
def test_rep_inverse(sigma):
    sigma = tuple(sigma)
    inverse = tuple(sigma.index(i) for i in range(5))
    p = 101
    lam = (3, 1, 1)
    prod = rep_matrix_modp(lam, sigma, p) @ rep_matrix_modp(lam, inverse, p) % p
    assert np.array_equal(prod, np.eye(dimension(lam), dtype=np.int64))


def test_rep_traces_match_characters_modp():
    p = 101
    for lam in partitions(5):
        chi = character(lam)
        for k, mu in enumerate(cycle_types(5)):
            tr = int(np.trace(rep_matrix_modp(lam, class_representative(mu), p))) % p
            assert tr == chi[k] % p


def test_stacked_rank_trivial_cases():
    # the regular module contains [lam] exactly d_lam times; one identity
    # block row exhausts them all
    p = 101
    ident = tuple(range(7))
    for lam in [(7,), (4, 2, 1)]:
        assert stacked_rank(lam, [{0: [(ident, 1)]}], 6, 7, p) == dimension(lam)
        assert stacked_rank(lam, [], 6, 7, p) == 0


def test_multiplicities_realization_independent():
    # ranks computed from the seminormal realization agree with ranks from
    # a conjugated (change-of-basis) realization on a small partition
    p = 101
    lam = (3, 2)
    d = dimension(lam)
    rng = random.Random(1)
    elt = [(tuple(rng.sample(range(5), 5)), rng.randint(1, 100)) for _ in range(3)]
    m1 = symrep.rep_of_group_algebra_modp(lam, elt, 5, p)
    # conjugate realization: S R(s) S^-1 has the same rank
    while True:
        s = np.array(
            [[rng.randint(0, p - 1) for _ in range(d)] for _ in range(d)], dtype=np.int64
        )
        from tortkara import modp as modp_mod

        if modp_mod.rank(s, p) == d:
            break
    # rank of m1 equals rank of conjugated matrix
    from tortkara import modp as modp_mod

    sinv = np.array(
        [[int(x) for x in row] for row in np.eye(d, dtype=np.int64)], dtype=np.int64
    )
    # solve s @ sinv = I mod p by Gaussian elimination via nullspace trick
    aug = np.concatenate([s, np.eye(d, dtype=np.int64)], axis=1)
    R, piv = modp_mod.rref(aug, p)
    sinv = R[:, d:]
    conj = s @ m1 % p @ sinv % p
    assert modp_mod.rank(conj, p) == modp_mod.rank(m1, p)


def test_mn_character_against_permutation_count():
    # [n-1,1] character value is (#fixed points - 1)
    for mu in cycle_types(5):
        fixed = sum(1 for part in mu if part == 1)
        assert mn_character((4, 1), mu) == fixed - 1
