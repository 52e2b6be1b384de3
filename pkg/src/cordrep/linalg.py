"""Exact dense linear algebra over a field object from :mod:`cordrep.fields`.

Matrices are tuples of row tuples.
"""

from __future__ import annotations

from typing import Sequence

Matrix = tuple


def shape(A) -> tuple:
    return (len(A), len(A[0]) if A else 0)


def zeros(F, r: int, c: int) -> Matrix:
    z = F.zero()
    return tuple(tuple(z for _ in range(c)) for _ in range(r))


def identity(F, n: int) -> Matrix:
    return tuple(tuple(F.one() if i == j else F.zero() for j in range(n)) for i in range(n))


def matmul(F, A, B, inner: int | None = None) -> Matrix:
    """A (r x k) times B (k x c); ``inner`` gives k when both are empty."""
    r = len(A)
    k = len(B) if inner is None else inner
    c = len(B[0]) if B else 0
    out = []
    for i in range(r):
        row = []
        for j in range(c):
            s = F.zero()
            for t in range(k):
                s = F.add(s, F.mul(A[i][t], B[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def matvec(F, A, v) -> tuple:
    return tuple(_dot(F, row, v) for row in A)


def _dot(F, u, v):
    s = F.zero()
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


def sub(F, A, B) -> Matrix:
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def transpose(A, cols: int | None = None) -> Matrix:
    c = len(A[0]) if A else (cols or 0)
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(c))


def column(A, j: int) -> tuple:
    return tuple(row[j] for row in A)


def rref(F, A):
    """Reduced row echelon form and pivot columns (leftmost nonzero pivots)."""
    M = [list(row) for row in A]
    rows, cols = shape(A)
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if not F.is_zero(M[i][c])), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, v) for v in M[r]]
        for i in range(rows):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return tuple(tuple(row) for row in M), tuple(pivots)


def rank(F, A) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(F, A)[1])


def inverse(F, A) -> Matrix:
    n = len(A)
    aug = tuple(tuple(A[i]) + identity(F, n)[i] for i in range(n))
    R, piv = rref(F, aug)
    if n and piv[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in R)


def solve_columns(F, B, pivots: Sequence[int], targets) -> Matrix:
    """Coordinates of each column of ``targets`` in the basis of columns
    ``pivots`` of ``B``; the columns must lie in that span."""
    basis = tuple(tuple(B[i][p] for p in pivots) for i in range(len(B)))
    k = len(pivots)
    tcols = len(targets[0]) if targets else 0
    aug = tuple(basis[i] + tuple(targets[i]) for i in range(len(B)))
    R, piv = rref(F, aug)
    if any(p >= k for p in piv):
        raise ValueError("target column outside the span")
    out = [[F.zero()] * tcols for _ in range(k)]
    for row_idx, p in enumerate(piv):
        for j in range(tcols):
            out[p][j] = R[row_idx][k + j]
    return tuple(tuple(r) for r in out)


def nullspace(F, A) -> list:
    """Basis of {v : A v = 0}."""
    rows, cols = shape(A)
    if cols == 0:
        return []
    R, piv = rref(F, A)
    free = [c for c in range(cols) if c not in piv]
    out = []
    for f in free:
        v = [F.zero()] * cols
        v[f] = F.one()
        for r_idx, p in enumerate(piv):
            v[p] = F.neg(R[r_idx][f])
        out.append(tuple(v))
    return out


def is_identity(F, A) -> bool:
    return all(A[i][j] == (F.one() if i == j else F.zero())
               for i in range(len(A)) for j in range(len(A)))
