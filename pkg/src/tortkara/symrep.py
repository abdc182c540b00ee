"""Symmetric group machinery: partitions, characters, irreducible matrices.

Characters come from the Murnaghan-Nakayama rule; representation
matrices use Young's seminormal form on standard tableaux (any faithful
realization would do -- only traces and ranks are consumed downstream).
Large group-algebra images are evaluated modulo a prime with numpy; a
second prime guards against modular rank drop.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

import numpy as np

from . import modp
from .words import MalformedInputError, Word

Partition = tuple[int, ...]


def partitions(n: int) -> list[Partition]:
    """Partitions of n in descending lex order ((n) first, (1,...,1) last)."""

    def gen(remaining: int, maxpart: int) -> list[Partition]:
        if remaining == 0:
            return [()]
        out = []
        for first in range(min(remaining, maxpart), 0, -1):
            out.extend((first,) + rest for rest in gen(remaining - first, first))
        return out

    if n < 1:
        raise MalformedInputError("n must be positive")
    return gen(n, n)


def check_partition(lam: Partition) -> None:
    if not lam or any(a <= 0 for a in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise MalformedInputError(f"invalid partition {lam}")


def dimension(lam: Partition) -> int:
    """Irreducible dimension d_lambda by the hook length formula."""
    check_partition(lam)
    n = sum(lam)
    hooks = 1
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // hooks


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for a in lam if a > j) for j in range(lam[0]))


def partition_label(lam: Partition) -> str:
    """Compact exponent notation, e.g. (3,1,1,1) -> '31^3'."""
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        mult = j - i
        out.append(str(lam[i]) if mult == 1 else f"{lam[i]}^{mult}")
        i = j
    return "".join(out)


def parse_partition(text: str) -> Partition:
    """Accepts comma form '4,2,1' and exponent labels like '3^21'
    (single-digit parts).  Inverse of partition_label on valid input."""
    text = text.replace(" ", "")
    if "," in text:
        lam = tuple(int(x) for x in text.split(","))
    else:
        parts: list[int] = []
        i = 0
        while i < len(text):
            if not text[i].isdigit():
                raise MalformedInputError(f"bad partition syntax {text!r}")
            part = int(text[i])
            i += 1
            mult = 1
            if i < len(text) and text[i] == "^":
                i += 1
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j == i:
                    raise MalformedInputError(f"bad partition syntax {text!r}")
                # exponent is a single digit; anything after starts new parts
                mult = int(text[i])
                i += 1
            parts.extend([part] * mult)
        lam = tuple(parts)
    check_partition(lam)
    return lam


# ---------------------------------------------------------------------------
# characters


def cycle_types(n: int) -> list[Partition]:
    """Conjugacy classes by cycle type: identity (1,...,1) first, then
    ascending lex on the descending-sorted cycle type."""
    return sorted(partitions(n))


def class_size(mu: Partition) -> int:
    n = sum(mu)
    centralizer = 1
    for k in set(mu):
        m = mu.count(k)
        centralizer *= k**m * factorial(m)
    return factorial(n) // centralizer


def class_representative(mu: Partition) -> Word:
    """A permutation of 0..n-1 with cycle type mu (consecutive cycles)."""
    perm = []
    start = 0
    for k in mu:
        perm.extend(list(range(start + 1, start + k)) + [start])
        start += k
    return tuple(perm)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Murnaghan-Nakayama value chi_lambda(class of cycle type mu).

    Border strips are removed through beta-numbers: with
    b_j = lam_j + (m-1-j), removing a k-strip replaces some b_j by
    b_j - k (which must be a fresh nonnegative value), and the sign is
    (-1)^(number of beta values jumped over).
    """
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    k, rest = mu[0], mu[1:]
    m = len(lam)
    beta = [lam[j] + (m - 1 - j) for j in range(m)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        crossings = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in bset - {b} | {nb}), reverse=True)
        newlam = tuple(newbeta[i] - (m - 1 - i) for i in range(m))
        newlam = tuple(x for x in newlam if x > 0)
        total += (-1) ** crossings * mn_character(newlam, rest)
    return total


def character(lam: Partition) -> list[int]:
    """Character values of [lambda] on the classes of cycle_types(n)."""
    check_partition(lam)
    n = sum(lam)
    return [mn_character(lam, mu) for mu in cycle_types(n)]


class CharacterTable:
    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions(n)
        self.classes = cycle_types(n)
        self.sizes = [class_size(mu) for mu in self.classes]
        self.table = {lam: character(lam) for lam in self.partitions}

    def decompose(self, char: list[int]) -> dict[Partition, int]:
        """Multiplicities of a character vector (values per class, class order)."""
        order = factorial(self.n)
        out = {}
        for lam in self.partitions:
            chi = self.table[lam]
            s = sum(sz * a * b for sz, a, b in zip(self.sizes, char, chi))
            q, r = divmod(s, order)
            if r:
                raise MalformedInputError("vector is not a proper character")
            if q:
                out[lam] = q
        return out


# ---------------------------------------------------------------------------
# standard tableaux and Young's seminormal form


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam (entries 1..n), sorted."""
    n = sum(lam)

    def fill(t: list[list[int]], k: int):
        if k > n:
            yield tuple(tuple(row) for row in t)
            return
        for i in range(len(lam)):
            j = len(t[i])
            if j < lam[i] and (i == 0 or len(t[i - 1]) > j):
                t[i].append(k)
                yield from fill(t, k + 1)
                t[i].pop()

    return sorted(fill([[] for _ in lam], 1))


def _positions(t) -> dict[int, tuple[int, int]]:
    return {val: (i, j) for i, row in enumerate(t) for j, val in enumerate(row)}


@lru_cache(maxsize=None)
def seminormal_generators(lam: Partition) -> list[tuple[tuple[Fraction, ...], ...]]:
    """Matrices of the adjacent transpositions s_1..s_{n-1} in Young's
    seminormal representation, as tuples of rows of Fractions."""
    tableaux = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(tableaux)}
    d = len(tableaux)
    n = sum(lam)
    gens = []
    for k in range(1, n):  # s_k swaps k and k+1
        m = [[Fraction(0)] * d for _ in range(d)]
        for t, ti in index.items():
            pos = _positions(t)
            (r1, c1), (r2, c2) = pos[k], pos[k + 1]
            if r1 == r2:
                m[ti][ti] = Fraction(1)
                continue
            if c1 == c2:
                m[ti][ti] = Fraction(-1)
                continue
            dist = (c2 - r2) - (c1 - r1)  # axial distance, never 0 here
            rho = Fraction(1, dist)
            swapped = tuple(
                tuple(k + 1 if v == k else k if v == k + 1 else v for v in row)
                for row in t
            )
            si = index[swapped]
            m[ti][ti] = rho
            m[ti][si] = Fraction(1) if ti < si else 1 - rho * rho
        gens.append(tuple(tuple(row) for row in m))
    return gens


def _adjacent_factorization(sigma: Word) -> list[int]:
    """sigma as a product of adjacent transpositions (indices k meaning s_k)."""
    word = list(sigma)
    ops = []
    n = len(word)
    for _ in range(n * n):
        done = True
        for i in range(n - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                ops.append(i + 1)
                done = False
        if done:
            break
    # bubble sort applied to sigma gives sigma^{-1} as product right-to-left;
    # reversing yields sigma = s_{ops[-1]} ... s_{ops[0]} read left to right
    return ops[::-1]


def rep_matrix_exact(lam: Partition, sigma: Word):
    """R_lambda(sigma) over Q as a list of rows of Fractions."""
    gens = seminormal_generators(lam)
    d = len(standard_tableaux(lam))
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    for k in _adjacent_factorization(sigma):
        g = gens[k - 1]
        m = [
            [sum(m[i][l] * g[l][j] for l in range(d)) for j in range(d)]
            for i in range(d)
        ]
    return m


@lru_cache(maxsize=None)
def seminormal_generators_modp(lam: Partition, p: int) -> np.ndarray:
    """The adjacent-transposition matrices reduced mod p, stacked (n-1, d, d)."""
    gens = seminormal_generators(lam)
    d = len(standard_tableaux(lam))
    out = np.zeros((len(gens), d, d), dtype=np.int64)
    for k, g in enumerate(gens):
        for i in range(d):
            for j in range(d):
                q = g[i][j]
                if q:
                    out[k, i, j] = q.numerator * pow(q.denominator, p - 2, p) % p
    return out


def rep_matrix_modp(lam: Partition, sigma: Word, p: int) -> np.ndarray:
    gens = seminormal_generators_modp(lam, p)
    d = gens.shape[1]
    m = np.eye(d, dtype=np.int64)
    for k in _adjacent_factorization(sigma):
        m = m @ gens[k - 1] % p
    return m


@lru_cache(maxsize=4)
def regular_rep_modp(lam: Partition, n: int, p: int) -> np.ndarray:
    """R_lambda(sigma) mod p for every sigma in lex order, shape (n!, d, d).

    Built along the Cayley graph of adjacent transpositions so each
    matrix costs a single d x d product.
    """
    perms = list(permutations(range(n)))
    index = {s: i for i, s in enumerate(perms)}
    gens = seminormal_generators_modp(lam, p)
    d = gens.shape[1]
    out = np.zeros((len(perms), d, d), dtype=np.int64)
    ident = tuple(range(n))
    out[index[ident]] = np.eye(d, dtype=np.int64)
    done = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for s in frontier:
            base = out[index[s]]
            for k in range(n - 1):
                # right multiplication by s_{k+1} swaps positions k, k+1
                t = list(s)
                t[k], t[k + 1] = t[k + 1], t[k]
                t = tuple(t)
                if t not in done:
                    out[index[t]] = base @ gens[k] % p
                    done.add(t)
                    nxt.append(t)
        frontier = nxt
    return out


def rep_of_group_algebra_modp(lam: Partition, elt, n: int, p: int) -> np.ndarray:
    """R_lambda(s) for a group algebra element s = [(perm, coeff), ...], mod p."""
    reps = regular_rep_modp(lam, n, p)
    perms = {s: i for i, s in enumerate(permutations(range(n)))}
    d = reps.shape[1]
    acc = np.zeros((d, d), dtype=np.int64)
    for sigma, c in elt:
        acc += int(c) % p * reps[perms[tuple(sigma)]]
    return acc % p


def rep_of_sign_vector_modp(lam: Partition, coeffs: np.ndarray, n: int, p: int) -> np.ndarray:
    """R_lambda of a dense element indexed by lex-ordered permutations."""
    reps = regular_rep_modp(lam, n, p)
    c = np.mod(np.asarray(coeffs, dtype=np.int64), p)
    # sum_i c[i] * reps[i]; accumulate in int64 (values < p^2 * n!)
    return np.tensordot(c, reps, axes=(0, 0)) % p


# ---------------------------------------------------------------------------
# stacked block-matrix ranks (isotypic multiplicities)


def stacked_rank(lam: Partition, rows, ntypes: int, n: int, p: int) -> int:
    """Multiplicity of [lam] in the module generated by block rows.

    Each row is a mapping {association type index: group algebra element
    [(perm, coeff), ...]}; block t of the row is R_lambda of that element
    (zero where absent).  The rank of the vertical stack is the
    multiplicity of [lam] in the submodule the rows generate inside the
    ntypes-fold sum of regular modules.
    """
    d = dimension(lam)
    blocks = np.zeros((len(rows) * d, ntypes * d), dtype=np.int64)
    for i, row in enumerate(rows):
        for t, elt in row.items():
            blocks[i * d : (i + 1) * d, t * d : (t + 1) * d] = rep_of_group_algebra_modp(
                lam, elt, n, p
            )
    return modp.rank(blocks, p)


def expansion_rank(lam: Partition, sign_vectors, n: int, p: int) -> int:
    """Rank of the block row [R(s_1)^t | ... | R(s_k)^t] where s_t is the
    normalized expansion of the identity-labelled type-t monomial, given
    as a dense coefficient vector over lex-ordered permutations."""
    d = dimension(lam)
    k = len(sign_vectors)
    m = np.zeros((d, k * d), dtype=np.int64)
    for t, v in enumerate(sign_vectors):
        m[:, t * d : (t + 1) * d] = rep_of_sign_vector_modp(lam, v, n, p).T
    return modp.rank(m, p)


def isotypic_nullity(lam: Partition, sign_vectors, n: int, p: int) -> int:
    """Multiplicity of [lam] in the kernel of the expansion map on the
    ntypes-fold sum of regular modules (symmetries not yet removed)."""
    return len(sign_vectors) * dimension(lam) - expansion_rank(lam, sign_vectors, n, p)
