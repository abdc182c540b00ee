"""Fast dense Gaussian elimination over a prime field, numpy-backed.

Matrices are int arrays with entries reduced to 0..p-1.  The reduced
row echelon computation is blocked: panels of columns are eliminated
classically (first-nonzero pivoting) while the trailing submatrix is
updated with float64 matrix products, which are exact here because
every intermediate sum is far below 2**53.
"""

from __future__ import annotations

import numpy as np

_PANEL = 128
_COL_CHUNK = 2048


def inverses_mod(p: int) -> np.ndarray:
    """Table of modular inverses, index 0 unused."""
    inv = np.zeros(p, dtype=np.int64)
    inv[1:] = [pow(int(x), p - 2, p) for x in range(1, p)]
    return inv


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact a @ b mod p via float64 (requires (p-1)^2 * inner_dim < 2^53)."""
    assert (p - 1) ** 2 * a.shape[1] < 2**53
    out = np.dot(a.astype(np.float64), b.astype(np.float64))
    return np.mod(out, p).astype(np.int64)


def _chunked_update(m: np.ndarray, g: np.ndarray, u: np.ndarray, p: int) -> None:
    """m -= g @ u (mod p), in place, chunked over columns to bound temporaries."""
    gf = g.astype(np.float64)
    for c0 in range(0, m.shape[1], _COL_CHUNK):
        c1 = min(c0 + _COL_CHUNK, m.shape[1])
        prod = np.dot(gf, u[:, c0:c1].astype(np.float64))
        m[:, c0:c1] = np.mod(m[:, c0:c1] - prod.astype(np.int64), p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.

    Returns (R, pivot_columns) where R holds only the rank nonzero rows,
    each pivot normalized to 1 and cleared above and below.
    """
    a = np.ascontiguousarray(np.mod(a, p)).astype(np.int64)
    m, n = a.shape
    inv = inverses_mod(p)
    piv_cols: list[int] = []
    r = 0
    for c0 in range(0, n, _PANEL):
        if r >= m:
            break
        c1 = min(c0 + _PANEL, n)
        panel = np.mod(a[r:, c0:c1].copy(), p)
        rows_avail = m - r
        used = np.zeros(rows_avail, dtype=bool)
        g_cols: list[np.ndarray] = []
        piv_local: list[int] = []
        piv_inv: list[int] = []
        for j in range(c1 - c0):
            col = panel[:, j]
            cand = np.nonzero((col != 0) & ~used)[0]
            if cand.size == 0:
                continue
            pr = int(cand[0])
            used[pr] = True
            pinv = int(inv[col[pr]])
            panel[pr] = panel[pr] * pinv % p
            f = np.where(used, 0, panel[:, j])
            panel -= np.outer(f, panel[pr])
            panel %= p
            g_cols.append(f)
            piv_local.append(pr)
            piv_inv.append(pinv)
            piv_cols.append(c0 + j)
        npiv = len(piv_local)
        a[r:, c0:c1] = panel
        if npiv:
            g = np.stack(g_cols, axis=1)  # factors vs finalized pivot rows
            trail = a[r:, c1:]
            u = np.zeros((npiv, n - c1), dtype=np.int64)
            for j, (pr, pinv) in enumerate(zip(piv_local, piv_inv)):
                row = trail[pr].copy()
                if j:
                    row -= (g[pr, :j] @ u[:j]) % p
                u[j] = row * pinv % p
            gbulk = g.copy()
            gbulk[piv_local] = 0
            _chunked_update(trail, gbulk, u, p)
            for j, pr in enumerate(piv_local):
                trail[pr] = u[j]
            # move pivot rows (in pivot order) to the top of the active block
            rest = [i for i in range(rows_avail) if not used[i]]
            a[r:] = a[r:][piv_local + rest]
            r += npiv
    # back substitution: clear entries above pivots, in reverse pivot blocks
    rank = r
    R = a[:rank]
    for k1 in range(rank, 0, -_PANEL):
        k0 = max(0, k1 - _PANEL)
        block = R[k0:k1]
        cols = piv_cols[k0:k1]
        # clear within the block (rows above later pivots of the same block)
        for j in range(1, k1 - k0):
            f = block[:j, cols[j]].copy()
            if f.any():
                block[:j] -= np.outer(f, block[j])
                block[:j] %= p
        if k0:
            above = R[:k0]
            f = above[:, cols].copy()
            if f.any():
                _chunked_update(above, f, block, p)
    return R.copy(), piv_cols


def rank(a: np.ndarray, p: int) -> int:
    return rref(a, p)[0].shape[0]


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right nullspace mod p via free-column back-substitution.

    Rows of the result are the basis vectors, one per free column, in
    increasing free-column order.
    """
    R, piv_cols = rref(a, p)
    n = a.shape[1]
    free = [c for c in range(n) if c not in set(piv_cols)]
    N = np.zeros((len(free), n), dtype=np.int64)
    N[np.arange(len(free)), free] = 1
    if piv_cols:
        N[:, piv_cols] = (-R[:, free].T) % p
    return N


def reduce_rows(rows: np.ndarray, R: np.ndarray, piv_cols: list[int], p: int) -> np.ndarray:
    """Reduce rows against an RCF basis: rows - rows[:, piv] @ R (mod p)."""
    if R.shape[0] == 0 or rows.shape[0] == 0:
        return np.mod(rows, p)
    f = np.mod(rows[:, piv_cols], p)
    out = np.mod(rows, p).copy()
    _chunked_update(out, f, R, p)
    return out
