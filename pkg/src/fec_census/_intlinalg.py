"""Fraction-free exact linear algebra on small integer matrices (lists of rows)."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _row_reduce(M: Matrix) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form over the integers: each pivot column is zero outside its pivot row."""
    rows = [list(r) for r in M]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pr = next((r for r in range(top, len(rows)) if rows[r][col]), None)
        if pr is None:
            continue
        rows[top], rows[pr] = rows[pr], rows[top]
        piv_row = rows[top]
        p = piv_row[col]
        for r in range(len(rows)):
            if r == top:
                continue
            q = rows[r][col]
            if q:
                row = rows[r]
                new = [p * x - q * y for x, y in zip(row, piv_row)]
                g = math.gcd(*new)
                if g > 1:
                    new = [x // g for x in new]
                rows[r] = new
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(M: Matrix) -> int:
    return len(_row_reduce(M)[1])


def nullspace(M: Matrix) -> list[tuple[int, ...]]:
    """
    Primitive integer basis of the right kernel of ``M``.

    >>> nullspace([[1, 1, 0], [0, 0, 1]])
    [(-1, 1, 0)]
    """
    if not M:
        return []
    ncols = len(M[0])
    rows, pivots = _row_reduce(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    L = math.lcm(*(rows[i][c] for i, c in enumerate(pivots))) if pivots else 1
    for f in free:
        v = [0] * ncols
        v[f] = L
        for i, c in enumerate(pivots):
            v[c] = -L * rows[i][f] // rows[i][c]
        g = math.gcd(*v)
        basis.append(tuple(x // g for x in v))
    return basis


def inverse(M: Matrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals; raises ``ValueError`` if singular."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        pr = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pr is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pr] = aug[pr], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                q = aug[r][col]
                aug[r] = [x - q * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
