"""Dense exact linear algebra over Z, Q and prime fields.

Small matrices (arity <= 5) are lists of rows of Python ints/Fractions;
prime-field matrices are numpy arrays handled by :mod:`tortkara.modp`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import modp
from .words import MalformedInputError


@dataclass(frozen=True)
class Domain:
    kind: str  # "Z", "Q" or "Fp"
    p: int | None = None

    def __str__(self) -> str:
        return self.kind if self.p is None else f"F{self.p}"


ZZ = Domain("Z")
QQ = Domain("Q")


def GF(p: int) -> Domain:
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise MalformedInputError(f"{p} is not prime")
    return Domain("Fp", p)


class ExactMatrix:
    """Dense matrix over one of the three coefficient domains."""

    def __init__(self, domain: Domain, rows):
        self.domain = domain
        if domain.kind == "Fp":
            self.data = np.mod(np.asarray(rows, dtype=np.int64), domain.p)
        else:
            self.data = [list(r) for r in rows]

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        if self.nrows == 0:
            return 0
        return len(self.data[0]) if isinstance(self.data, list) else self.data.shape[1]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def dump(self, path) -> None:
        """Write in the text format: 'rows cols modulus' then one row per line."""
        modulus = self.domain.p or 0
        with open(path, "w") as fh:
            fh.write(f"{self.nrows} {self.ncols} {modulus}\n")
            for i in range(self.nrows):
                fh.write(" ".join(str(int(x)) for x in self.row(i)) + "\n")

    @classmethod
    def load(cls, path) -> "ExactMatrix":
        with open(path) as fh:
            nrows, ncols, modulus = map(int, fh.readline().split())
            rows = [list(map(int, fh.readline().split())) for _ in range(nrows)]
        for r in rows:
            if len(r) != ncols:
                raise MalformedInputError("matrix row width mismatch in dump file")
        return cls(GF(modulus) if modulus else ZZ, rows)


# ---------------------------------------------------------------------------
# row canonical form over a field


def _rcf_fraction(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pivot = m[r][c]
        m[r] = [x / pivot for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], piv_cols


def rcf(M: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Reduced row echelon form and rank; field domains only."""
    if M.domain.kind == "Z":
        raise MalformedInputError("rcf requires a field domain; use hnf_transform over Z")
    if M.domain.kind == "Fp":
        R, piv = modp.rref(M.data, M.domain.p)
        return ExactMatrix(M.domain, R), len(piv)
    R, piv = _rcf_fraction(M.data)
    return ExactMatrix(QQ, R), len(piv)


def pivot_columns(M: ExactMatrix) -> list[int]:
    if M.domain.kind == "Fp":
        return modp.rref(M.data, M.domain.p)[1]
    return _rcf_fraction(M.data)[1]


def nullspace(M: ExactMatrix) -> ExactMatrix:
    """Rows form a basis of the right nullspace (free-column back-substitution)."""
    if M.domain.kind == "Fp":
        return ExactMatrix(M.domain, modp.nullspace(M.data, M.domain.p))
    if M.domain.kind == "Z":
        raise MalformedInputError("nullspace requires a field domain")
    R, piv = _rcf_fraction(M.data)
    n = M.ncols
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    rows = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -R[i][f]
        rows.append(v)
    return ExactMatrix(QQ, rows)


def row_space_equal(A: ExactMatrix, B: ExactMatrix) -> bool:
    if A.ncols != B.ncols:
        raise MalformedInputError("width mismatch")
    RA, _ = rcf(A)
    RB, _ = rcf(B)
    if A.domain.kind == "Fp":
        return RA.data.shape == RB.data.shape and bool(np.array_equal(RA.data, RB.data))
    return RA.data == RB.data


# ---------------------------------------------------------------------------
# Hermite normal form with unimodular transform


def hnf_transform(M: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Row-style HNF of an integer matrix by Euclidean row operations.

    Returns (H, U) with U unimodular, U M = H, pivots positive and
    entries above each pivot reduced into [0, pivot).
    """
    if M.domain.kind != "Z":
        raise MalformedInputError("hnf_transform requires the integer domain")
    m = [[int(x) for x in r] for r in M.data]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        # Euclidean reduction: shrink entries in column c below row r
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][c] // m[i0][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[i0])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[i0])]
        nz = [i for i in range(r, nrows) if m[i][c] != 0]
        if not nz:
            continue
        i0 = nz[0]
        m[r], m[i0] = m[i0], m[r]
        u[r], u[i0] = u[i0], u[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        pivot = m[r][c]
        for i in range(r):  # reduce entries above the pivot
            q = m[i][c] // pivot
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == nrows:
            break
    return ExactMatrix(ZZ, m), ExactMatrix(ZZ, u)


def det_unimodular(U: ExactMatrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [[int(x) for x in r] for r in U.data]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# symmetric lifts


def symmetric_lift(v, p: int, scale: int = 1):
    """Lift prime-field entries to representatives in (-p/2, p/2],
    optionally after multiplying by a unit."""
    out = []
    for x in v:
        y = int(x) * scale % p
        out.append(y - p if y > p // 2 else y)
    return out


def best_unit_scale(v, p: int) -> int:
    """Unit multiplier minimizing the largest |entry| of the symmetric lift."""
    best, best_key = 1, None
    for s in range(1, p):
        lifted = symmetric_lift(v, p, s)
        key = (max(abs(x) for x in lifted), sum(abs(x) for x in lifted))
        if best_key is None or key < best_key:
            best, best_key = s, key
    return best


# ---------------------------------------------------------------------------
# incremental module closure


def incremental_closure(
    generators, arity: int, domain: Domain
) -> tuple[list[int], ExactMatrix]:
    """Repeatedly adjoin the full S_n orbit of each generator and track rank.

    For each generator in order, all n! permuted and straightened copies
    are stacked below the retained RCF rows; the RCF of the stack is
    computed, the cumulative rank recorded and the RCF retained.
    Returns (cumulative ranks, final RCF basis of the generated module).
    """
    from . import orbits, ternary  # deferred: orbits needs the ternary machinery

    for g in generators:
        if g.arity != arity:
            raise MalformedInputError("generator arity mismatch")
    ranks: list[int] = []
    if domain.kind == "Fp":
        p = domain.p
        basis_len = len(ternary.skew_basis(arity))
        upper = np.zeros((0, basis_len), dtype=np.int64)
        for g in generators:
            rows = orbits.orbit_rows_modp(g, p)
            stacked = np.vstack([upper, rows])
            upper, piv = modp.rref(stacked, p)
            ranks.append(upper.shape[0])
        return ranks, ExactMatrix(domain, upper)
    if domain.kind == "Q":
        upper: list[list[Fraction]] = []
        for g in generators:
            rows = orbits.orbit_rows_exact(g)
            upper, _ = _rcf_fraction(upper + rows)
            ranks.append(len(upper))
        return ranks, ExactMatrix(QQ, upper)
    raise MalformedInputError("closure requires a field domain")
