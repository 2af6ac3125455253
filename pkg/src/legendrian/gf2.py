"""Exact linear algebra over GF(2), backed by numpy uint8 arrays.

All matrices are square unless noted, entries in {0, 1}, and every
operation reduces mod 2.  Indices are 0-based throughout.
"""

import numpy as np


def zeros(n, m=None):
    if m is None:
        m = n
    return np.zeros((n, m), dtype=np.uint8)


def identity(n):
    return np.eye(n, dtype=np.uint8)


def mat(rows):
    a = np.array(rows, dtype=np.uint8) % 2
    return a


def freeze(a):
    """Return a read-only view of a; used by immutable value objects."""
    b = np.ascontiguousarray(a, dtype=np.uint8) % 2
    b.setflags(write=False)
    return b


def matmul(a, b):
    return (a.astype(np.uint8) @ b.astype(np.uint8)) % 2


def madd(a, b):
    return (a ^ b).astype(np.uint8)


def is_zero(a):
    return not a.any()


def h_mat(n, k, l):
    """Single-entry matrix with a 1 in position (k, l)."""
    a = zeros(n)
    a[k, l] = 1
    return a


def e_mat(n, k, l):
    """Elementary transvection I + H_{k,l}; its own inverse over GF(2)."""
    a = identity(n)
    a[k, l] = 1
    return a


def p_mat(n, i):
    """Permutation matrix swapping i and i+1."""
    a = identity(n)
    a[i, i] = a[i + 1, i + 1] = 0
    a[i, i + 1] = a[i + 1, i] = 1
    return a


def delete_pair(a, i):
    """Remove rows and columns i, i+1 (the J (.) J^T quotient)."""
    keep = [r for r in range(a.shape[0]) if r not in (i, i + 1)]
    return a[np.ix_(keep, keep)].copy()


def insert_pair(a, i):
    """Insert two zero rows/columns so the new pair sits at i, i+1."""
    n = a.shape[0]
    b = zeros(n + 2)
    old = list(range(i)) + list(range(i + 2, n + 2))
    b[np.ix_(old, old)] = a
    return b


def inverse(a):
    """Invert over GF(2) by Gaussian elimination; raises on singular."""
    n = a.shape[0]
    work = np.concatenate([a.copy() % 2, identity(n)], axis=1)
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if work[r, col]:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix over GF(2)")
        if piv != row:
            work[[row, piv]] = work[[piv, row]]
        for r in range(n):
            if r != row and work[r, col]:
                work[r] ^= work[row]
        row += 1
    return work[:, n:].copy()


def conjugate(u, a):
    """u a u^{-1}."""
    return matmul(matmul(u, a), inverse(u))


def solve(rows, rhs, n_unknowns):
    """Solve a GF(2) linear system given as integer bitmask rows.

    rows[i] is a bitmask over the unknowns, rhs[i] in {0,1}.  Returns a
    solution bitmask, or None when the system is inconsistent.
    """
    aug = [(r << 1) | b for r, b in zip(rows, rhs)]
    pivots = {}
    for cur in aug:
        for col in range(n_unknowns - 1, -1, -1):
            if not (cur >> 1) & (1 << col):
                continue
            if col in pivots:
                cur ^= pivots[col]
            else:
                pivots[col] = cur
                cur = 0
                break
        if cur & 1 and not cur >> 1:
            return None
    sol = 0
    for col in sorted(pivots):
        row = pivots[col]
        val = row & 1
        mask = row >> 1
        mask &= ~(1 << col)
        acc = val
        m = mask & sol
        while m:
            acc ^= 1
            m &= m - 1
        if acc:
            sol |= 1 << col
    return sol


def strictly_lower(a):
    return not np.triu(a).any()


def as_tuple(a):
    return tuple(tuple(int(x) for x in row) for row in a)
