"""Exact integer matrix utilities: Smith normal form and determinants.

Matrices are lists of lists of Python ints.  Sizes here are tiny (chain
complexes of special polyhedra, handle presentations), so the plain
row/column reduction below is more than fast enough and stays exact.
"""

from __future__ import annotations


def copy_matrix(m):
    return [row[:] for row in m]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def smith_normal_form(m):
    """Diagonal invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns the list of nonzero invariant factors (all positive).  The
    matrix is not modified.
    """
    a = copy_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    top = 0
    while top < min(rows, cols):
        # find a pivot of minimal absolute value in the remaining block
        pivot = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        # clear the pivot row and column; restart if a remainder pops up
        # (the classical reduction loop, terminates since |pivot| decreases)
        while True:
            p = a[top][top]
            done = True
            for i in range(top + 1, rows):
                if a[i][top]:
                    q = a[i][top] // p
                    for j in range(top, cols):
                        a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, cols):
                if a[top][j]:
                    q = a[top][j] // p
                    for i in range(top, rows):
                        a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for i in range(rows):
                            a[i][top], a[i][j] = a[i][j], a[i][top]
                        done = False
                        break
            if done:
                break
        # enforce divisibility d_top | entries of the remaining block
        p = a[top][top]
        fixed = True
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if a[i][j] % p:
                    for jj in range(top, cols):
                        a[top][jj] += a[i][jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        factors.append(abs(p))
        top += 1
    return factors


def rank(m):
    return len(smith_normal_form(m))


def cokernel(m, ambient_rank):
    """Cokernel of m viewed as a map into Z^ambient_rank.

    Returns (free_rank, torsion) with torsion the invariant factors > 1.
    """
    factors = smith_normal_form(m) if m and m[0] else []
    free = ambient_rank - len(factors)
    torsion = [d for d in factors if d != 1]
    return free, torsion


def det(m):
    """Exact determinant via Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
