"""Exact Smith normal form over the integers with unimodular certificates."""

from __future__ import annotations

from fractions import Fraction


def smith_normal_form(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (D, U, V) with U @ mat @ V = D, U and V unimodular and D
    diagonal with a divisibility chain d1 | d2 | ... and di >= 0.

    Exact arbitrary-precision arithmetic throughout.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [list(map(int, row)) for row in mat]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the trailing submatrix
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        changed = True
        while changed:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
        # pivot must divide the whole trailing block
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # add offending row, retry elimination
            continue
        t += 1

    # normalize signs, then enforce the divisibility chain (already ensured
    # by the pivot-divides-block loop, but keep the explicit pass cheap)
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return a, u, v


def diagonal(d: list[list[int]]) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def int_det(mat: list[list[int]]) -> int:
    """Exact determinant (fraction-free Gaussian elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if a[r][i]), None)
        if p is None:
            return 0
        if p != i:
            a[i], a[p] = a[p], a[i]
            det = -det
        det *= a[i][i]
        inv = 1 / a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    assert det.denominator == 1
    return int(det)


def mat_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def signature(mat: list[list[int]]) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric integer matrix, exact."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    pos = neg = 0
    live = list(range(n))
    while live:
        piv = next((i for i in live if a[i][i]), None)
        if piv is None:
            off = next(((i, j) for i in live for j in live
                        if i != j and a[i][j]), None)
            if off is None:
                break  # remaining block is zero
            i, j = off
            # congruence: add row/col j to row/col i to expose a pivot
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            continue
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(piv)
        for r in live:
            f = a[r][piv] / d
            if f:
                for c in range(n):
                    a[r][c] -= f * a[piv][c]
        for c in live:
            f = a[piv][c] / d
            if f:
                for r in range(n):
                    a[r][c] -= f * a[r][piv]
    return pos, neg
