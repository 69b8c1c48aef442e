"""Exact integer/rational linear algebra: Bareiss determinants, Hermite normal form."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def bareiss_determinant(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - mik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rational_determinant(a: Sequence[Sequence]) -> Fraction:
    """Clear each row's denominators, run Bareiss, rescale."""
    scale = 1
    rows = []
    for row in a:
        den = 1
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
        scale *= den
        rows.append([int(Fraction(x) * den) for x in row])
    return Fraction(bareiss_determinant(rows), scale)


def rank(a: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in a]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style HNF: returns (H, U) with H == U @ a, U unimodular.

    H is upper echelon with positive pivots and entries above each pivot
    reduced into [0, pivot).
    """
    m = len(a)
    k = len(a[0]) if m else 0
    h = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub(i, j, q):  # row_i -= q * row_j
        if q:
            h[i] = [x - q * y for x, y in zip(h[i], h[j])]
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    p = 0
    for c in range(k):
        if p == m:
            break
        while True:
            nz = [i for i in range(p, m) if h[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(h[i][c]))
            swap(p, best)
            done = True
            for i in range(p + 1, m):
                if h[i][c]:
                    sub(i, p, h[i][c] // h[p][c])
                    if h[i][c]:
                        done = False
            if done:
                break
        if p < m and h[p][c] != 0:
            if h[p][c] < 0:
                h[p] = [-x for x in h[p]]
                u[p] = [-x for x in u[p]]
            for i in range(p):
                sub(i, p, h[i][c] // h[p][c])
            p += 1
    return h, u


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Lattice basis (as rows) of {x in Z^ncols : a @ x == 0}."""
    if not a:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    at = [[a[i][j] for i in range(len(a))] for j in range(ncols)]
    h, u = hermite_normal_form(at)
    return [u[i] for i in range(ncols) if not any(h[i])]


def solve_in_basis(basis_cols: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    """Coordinates c with sum_j c_j * basis_cols[j] == v (v must lie in the span)."""
    d = len(basis_cols)
    n = len(v)
    # augmented n x (d+1) system, eliminate over Q
    rows = [[Fraction(basis_cols[j][i]) for j in range(d)] + [Fraction(v[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(d):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            raise ValueError("basis vectors are linearly dependent")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][d] for i in range(r, n)):
        raise ValueError("vector is not in the span of the basis")
    return [rows[i][d] for i in range(d)]
