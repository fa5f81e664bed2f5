"""Exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  All
routines are plain Gaussian elimination; sizes in this package stay in the
low hundreds, so no fraction-free or blocked tricks are needed.  Products
of two reduced entries fit comfortably in int64 for any prime < 2**31.
"""

from __future__ import annotations

import numpy as np


def asmat(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2d array, got shape {m.shape}")
    return m


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a, b, p: int) -> np.ndarray:
    a, b = asmat(a), asmat(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = asmat(a).copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    m = asmat(a)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Rows form a basis of {x : a @ x = 0 mod p}."""
    m = asmat(a)
    rows, cols = m.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return eye(cols)
    red, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, c]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b mod p, or None if inconsistent.

    b may be a vector or a matrix of stacked right-hand columns.
    """
    m = asmat(a)
    bv = np.asarray(b, dtype=np.int64) % p
    vector_input = bv.ndim == 1
    if vector_input:
        bv = bv[:, None]
    if bv.shape[0] != m.shape[0]:
        raise ValueError(f"rhs shape mismatch {m.shape} vs {bv.shape}")
    aug = np.concatenate([m, bv], axis=1) if m.shape[1] else bv.copy()
    red, pivots = rref(aug, p)
    ncols = m.shape[1]
    x = zeros(ncols, bv.shape[1])
    for r, c in enumerate(pivots):
        if c >= ncols:
            return None
        x[c] = red[r, ncols:]
    return x[:, 0] if vector_input else x


def row_space_rank(rows_list, p: int, width: int) -> int:
    if not rows_list:
        return 0
    return rank(np.array(rows_list, dtype=np.int64).reshape(len(rows_list), width), p)


def is_invertible(a, p: int) -> bool:
    m = asmat(a)
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


def express(basis_rows: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray | None:
    """Coordinates of each row of `vectors` in the span of `basis_rows`.

    Returns a matrix c with vectors = c @ basis_rows, or None if some row
    lies outside the span.
    """
    basis_rows = asmat(basis_rows)
    vectors = asmat(vectors)
    sol = solve(basis_rows.T, vectors.T, p)
    return None if sol is None else sol.T % p
