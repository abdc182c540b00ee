"""Full symmetric-group orbits of skew elements as coefficient matrices.

Two routes compute the same rows: a per-monomial straightening route
(exact coefficients, any arity) and a vectorized per-association-type
route used for the large arity-7 closures.  Because every association
type is preserved by relabelling, straightening a relabelled canonical
monomial only ever applies a fixed set of positional swaps, which is
what the vectorized route exploits.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from . import ternary
from .ternary import SkewElement, skew_basis

# positional straightening ops per arity/type: ("swap", i, j) compares the
# letters at flat positions i and j and swaps them (sign -1) when out of
# order; ("blockswap", i, j, width) does the same for letter blocks.
_TYPE_OPS = {
    (3, 0): [("swap", 0, 1)],
    (5, 0): [("swap", 0, 1)],
    (5, 1): [("swap", 0, 1), ("swap", 2, 3)],
    (7, 0): [("swap", 0, 1)],
    (7, 1): [("swap", 0, 1), ("swap", 2, 3)],
    (7, 2): [("swap", 0, 1), ("swap", 2, 3)],
    (7, 3): [("swap", 0, 1), ("swap", 2, 3), ("swap", 4, 5)],
    (7, 4): [("swap", 0, 1), ("swap", 3, 4), ("blockswap", 0, 3, 3)],
    (7, 5): [("swap", 0, 1), ("swap", 4, 5)],
}


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _type_index_table(n: int, t: int) -> np.ndarray:
    """base-n letter-tuple key -> global basis index, for type t monomials."""
    basis = skew_basis(n)
    table = np.full(n**n, -1, dtype=np.int32)
    powers = n ** np.arange(n)
    lo = basis.type_offsets[t]
    for j in range(basis.type_sizes[t]):
        w = np.array(ternary.leaves(basis[lo + j]), dtype=np.int64)
        table[int(w @ powers)] = lo + j
    return table


def _canonicalize_words(n: int, t: int, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Apply the type's straightening swaps to rows of letter tuples.

    Returns (canonical words, signs); w is modified in place.
    """
    signs = np.ones(w.shape[0], dtype=np.int64)
    for op in _TYPE_OPS[(n, t)]:
        if op[0] == "swap":
            _, i, j = op
            bad = w[:, i] > w[:, j]
            w[bad, i], w[bad, j] = w[bad, j], w[bad, i].copy()
        else:
            _, i, j, width = op
            bad = w[:, i] > w[:, j]
            tmp = w[bad, i : i + width].copy()
            w[bad, i : i + width] = w[bad, j : j + width]
            w[bad, j : j + width] = tmp
        signs[bad] *= -1
    return w, signs


def orbit_rows_modp(g: SkewElement, p: int) -> np.ndarray:
    """All n! permuted, straightened copies of g as rows mod p (lex perm order)."""
    n = g.arity
    basis = skew_basis(n)
    S = _perm_array(n)
    nperms = S.shape[0]
    rows = np.zeros((nperms, len(basis)), dtype=np.int64)
    powers = n ** np.arange(n)
    by_type: dict[int, list[tuple[np.ndarray, int]]] = {}
    for i, c in g.coeffs.items():
        t = basis.type_of(i)
        w = np.array(ternary.leaves(basis[i]), dtype=np.int64)
        by_type.setdefault(t, []).append((w, int(c)))
    for t, terms in by_type.items():
        W = np.stack([w for w, _ in terms])  # (k, n)
        C = np.array([c for _, c in terms], dtype=np.int64)
        table = _type_index_table(n, t)
        # relabel: for each sigma, letter w -> sigma[w]
        relabeled = S[:, W].reshape(-1, n)  # (nperms * k, n)
        canon, signs = _canonicalize_words(n, t, relabeled)
        idx = table[canon @ powers]
        assert np.all(idx >= 0)
        coeffs = signs * np.tile(C, nperms)
        rows[np.repeat(np.arange(nperms), len(terms)), idx] += coeffs
    return np.mod(rows, p)


def orbit_rows_exact(g: SkewElement) -> list[list]:
    """Same rows as :func:`orbit_rows_modp` but with exact coefficients,
    computed monomial by monomial via generic straightening."""
    n = g.arity
    basis = skew_basis(n)
    rows = []
    for sigma in permutations(range(n)):
        row = [0] * len(basis)
        for i, c in g.coeffs.items():
            sign, canon = ternary.straighten(ternary.relabel(basis[i], sigma))
            row[basis.index[canon]] += sign * c
        rows.append(row)
    return rows
