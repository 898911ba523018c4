"""Dense linear algebra over F_p on numpy int64 arrays.

Entries live in [0, p).  With p < 2^16 the intermediate products in an
elimination step stay far below 2^63, so plain int64 arithmetic with a final
reduction is exact.
"""
from __future__ import annotations

import numpy as np


def rref(A, p: int):
    """Reduced row echelon form mod p.

    Returns (R, pivots): R has unit pivots with zeros above and below, rows of
    zeros dropped; pivots lists the pivot column of each row of R.  Forward
    elimination only touches rows below the pivot and columns from the pivot
    on; clearing above waits for a back-substitution pass over the surviving
    rows, which is cheaper when the matrix is much taller than its rank.
    """
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("need a 2d array")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r, c:] = R[r, c:] * inv % p
        sel = r + 1 + np.nonzero(R[r + 1 :, c])[0]
        if sel.size:
            R[sel, c:] = (R[sel, c:] - np.outer(R[sel, c], R[r, c:])) % p
        pivots.append(c)
        r += 1
    R = R[:r]
    for k in range(r - 1, 0, -1):
        c = pivots[k]
        sel = np.nonzero(R[:k, c])[0]
        if sel.size:
            R[sel, c:] = (R[sel, c:] - np.outer(R[sel, c], R[k, c:])) % p
    return R, pivots


def rank(A, p: int) -> int:
    return len(rref(A, p)[1])


def reduce_rows(R, pivots, B, p: int):
    """Reduce each row of B modulo the span of the rref rows R."""
    B = np.array(B, dtype=np.int64) % p
    if len(pivots) and B.size:
        B = (B - B[:, pivots] @ R) % p
    return B


def nullspace(A, p: int):
    """Basis of {v : A v = 0}, one vector per row of the result."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = rref(A, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            v = int(R[r, c])
            if v:
                basis[k, pc] = p - v
    return basis
