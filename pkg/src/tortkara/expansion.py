"""Expansion of ternary / commutator monomials into the free Zinbiel algebra.

The triple product is the iterated commutator [x,y,z] = [[x,y],z] with
[u,v] = uv - vu in the free Zinbiel algebra; expanding all brackets
gives signed binary monomials whose Zinbiel normal forms aggregate into
a coefficient vector over the right-normed basis.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from . import ternary, words
from .words import MalformedInputError, Word, ZinbielElement


# A bracket tree is int | ("com", left, right): every internal node is a
# Zinbiel commutator.  Expansion replaces [u,v] by uv - vu recursively.
BracketTree = int | tuple


def expand_bracket_tree(t: BracketTree) -> list[tuple[int, words.BinaryMonomial]]:
    """Signed plain binary monomials obtained by expanding every commutator."""
    if isinstance(t, int):
        return [(1, t)]
    _, left, right = t
    out = []
    for sl, bl in expand_bracket_tree(left):
        for sr, br in expand_bracket_tree(right):
            out.append((sl * sr, (bl, br)))
            out.append((-sl * sr, (br, bl)))
    return out


def expand_commutator(t: BracketTree) -> ZinbielElement:
    """Expand a multilinear bracket tree and aggregate its Zinbiel normal form."""
    terms = expand_bracket_tree(t)
    n = words.arity(terms[0][1])
    el = ZinbielElement(n)
    for sign, mono in terms:
        for w in words.znf(mono):
            el.coeffs[words.lex_rank(w) - 1] += sign
    return el


def ternary_to_bracket(t: ternary.TernaryMonomial) -> BracketTree:
    """[x,y,z] -> [[x,y],z] recursively."""
    if isinstance(t, int):
        return t
    x, y, z = (ternary_to_bracket(c) for c in t)
    return ("com", ("com", x, y), z)


def expand_triple(x: int, y: int, z: int) -> ZinbielElement:
    """Expansion of [x,y,z] on three distinct variables (a 6-term sign vector)."""
    if len({x, y, z}) != 3:
        raise MalformedInputError("expand_triple requires three distinct variables")
    return expand_commutator(ternary_to_bracket((x, y, z)))


def expand(m: ternary.TernaryMonomial) -> ZinbielElement:
    """Expansion of a canonical ternary monomial into Zinb(n)."""
    if not ternary.is_canonical(m):
        raise MalformedInputError(
            f"{ternary.format_ternary(m)} is not canonical; straighten first"
        )
    return expand_commutator(ternary_to_bracket(m))


def expand_element(x: ternary.SkewElement) -> ZinbielElement:
    """Linear extension of `expand` to skew elements."""
    basis = ternary.skew_basis(x.arity)
    el = ZinbielElement(x.arity)
    for i, c in x.coeffs.items():
        e = expand(basis[i])
        for k, v in enumerate(e.coeffs):
            el.coeffs[k] += c * v
    return el


# ---------------------------------------------------------------------------
# base sign vectors and expansion matrices


@lru_cache(maxsize=None)
def base_sign_vectors(n: int) -> list[np.ndarray]:
    """Per association type, the expansion of the identity-permutation
    monomial as a length-n! vector of entries +-1."""
    out = []
    for shape in ternary._shapes(n):
        el = expand(shape)
        vec = np.array(el.coeffs, dtype=np.int8)
        if not np.all(np.abs(vec) == 1):
            raise AssertionError("expansion of a basis monomial is not a sign vector")
        out.append(vec)
    return out


def sign_matrix_string(el: ZinbielElement, width: int = 24) -> list[str]:
    """Render an all +-1 coefficient vector as rows of '+'/'-' characters."""
    s = el.sign_string()
    return [s[i : i + width] for i in range(0, len(s), width)]


@lru_cache(maxsize=None)
def _word_rank_table(n: int) -> np.ndarray:
    """Lookup from base-n encoded letter tuples to 0-based lex rank."""
    table = np.full(n**n, -1, dtype=np.int32)
    powers = n ** np.arange(n)
    for r, w in enumerate(permutations(range(n))):
        table[int(np.dot(np.array(w), powers))] = r
    return table


@lru_cache(maxsize=None)
def _all_perm_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8)


def expansion_matrix(n: int, p: int | None = None) -> np.ndarray:
    """Expansion matrix E_n: n! rows (right-normed basis, lex order),
    one column per skew-basis monomial.

    Columns are generated by applying each monomial's letter permutation
    to the per-type base sign vector rather than by re-expanding.
    Entries are -1/0/+1 for p=None, reduced representatives mod p otherwise.
    """
    if n not in (3, 5, 7):
        raise MalformedInputError(f"unsupported arity {n}")
    basis = ternary.skew_basis(n)
    bases = base_sign_vectors(n)
    nrows = factorial(n)
    W = _all_perm_array(n).astype(np.int64)  # all words, lex order
    powers = n ** np.arange(n)
    rank_table = _word_rank_table(n)
    E = np.zeros((nrows, len(basis)), dtype=np.int8)
    for t, shape in enumerate(basis.shapes):
        base = bases[t]
        lo = basis.type_offsets[t]
        for j in range(basis.type_sizes[t]):
            sigma = np.array(ternary.leaves(basis[lo + j]), dtype=np.int64)
            # coefficient of the word sigma(w) equals base[rank(w)]
            keys = (sigma[W] @ powers).astype(np.int64)
            E[rank_table[keys], lo + j] = base
    if p is not None:
        return E.astype(np.int64) % p
    return E
