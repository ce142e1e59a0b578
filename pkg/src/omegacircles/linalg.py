"""Tier-agnostic Gaussian elimination on small dense systems."""
from __future__ import annotations

from .scalars import Approx, is_zero, rational


def _lift(v):
    return rational(v) if isinstance(v, int) else v


def _pivot_row(rows, col, start):
    best = None
    for i in range(start, len(rows)):
        v = rows[i][col]
        if is_zero(v):
            continue
        if not isinstance(v, Approx):
            return i
        if best is None or abs(v.value) > abs(rows[best][col].value):
            best = i
    return best


def rref(matrix):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    rows = [[_lift(v) for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        i = _pivot_row(rows, c, r)
        if i is None:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for k in range(len(rows)):
            if k != r and not is_zero(rows[k][c]):
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(matrix):
    """Basis of the right null space, one vector per free column."""
    rows, pivots = rref(matrix)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [rational(0)] * ncols
        vec[f] = rational(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][f]
        basis.append(vec)
    return basis


def solve(matrix, rhs):
    """Unique solution of a square system, or None if singular."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    n = len(matrix)
    if pivots != list(range(n)):
        return None
    return [rows[i][n] for i in range(n)]


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
