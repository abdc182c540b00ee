"""Exact LLL lattice basis reduction over the integers.

Uses the all-integer formulation (de Weger): the Gram-Schmidt data is
carried as integers d_i = det(Gram of first i rows) and
lambda_{ij} = d_{j+1} mu_{ij}, so no rationals appear in the loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import log10

from .words import MalformedInputError


def _dot(u: list[int], v: list[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def squared_lengths(basis: list[list[int]]) -> list[int]:
    """Exact squared Euclidean row lengths (with multiplicity, in row order)."""
    return [_dot(b, b) for b in basis]


def measure(basis: list[list[int]]) -> float:
    """Base-10 log of the product of squared row lengths."""
    out = 0.0
    for q in squared_lengths(basis):
        if q == 0:
            raise MalformedInputError("zero row in basis")
        out += log10(q)
    return out


def lll(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """delta-LLL-reduced basis spanning the same lattice as the input rows.

    Exact arithmetic throughout; requires linearly independent rows and
    delta in (1/4, 1].
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise MalformedInputError("delta must lie in (1/4, 1]")
    b = [[int(x) for x in row] for row in basis]
    n = len(b)
    if n == 0:
        return b
    # integral Gram-Schmidt bookkeeping
    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = _dot(b[i], b[j])
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                d[i + 1] = u
        if d[i + 1] <= 0:
            raise MalformedInputError("basis rows are linearly dependent")

    def red(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])  # round to nearest
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        for i in range(k + 1, n):
            t = lam[i][k - 1]
            lam[i][k - 1] = (t * lam[k][k - 1] + lam[i][k] * d[k - 1]) // d[k]
            lam[i][k] = (t * d[k + 1] - lam[i][k] * lam[k][k - 1]) // d[k]
        d[k] = (d[k - 1] * d[k + 1] + lam[k][k - 1] ** 2) // d[k]

    nd, dd = delta.numerator, delta.denominator
    k = 1
    while k < n:
        red(k, k - 1)
        if dd * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < nd * d[k] ** 2:
            swap(k)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return b


def gram_schmidt(basis: list[list[int]]):
    """Exact rational Gram-Schmidt: returns (orthogonal rows, mu)."""
    n = len(basis)
    ortho: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            denom = sum(x * x for x in ortho[j])
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(basis[i], ortho[j])) / denom
            v = [x - mu[i][j] * y for x, y in zip(v, ortho[j])]
        ortho.append(v)
    return ortho, mu


def is_reduced(basis: list[list[int]], delta: Fraction) -> bool:
    """Exact verification of size reduction and the Lovasz condition."""
    delta = Fraction(delta)
    ortho, mu = gram_schmidt(basis)
    n = len(basis)
    norms = [sum(x * x for x in o) for o in ortho]
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, n):
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            return False
    return True
