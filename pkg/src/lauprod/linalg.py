"""Exact Gaussian elimination over :class:`~lauprod.scalar.Scalar`.

Matrices are lists of rows.  Pivot choice is always the first nonzero entry
at or below the current row (lowest index), so every result is reproducible.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Scalar

Matrix = list[list[Scalar]]


def copy_matrix(m) -> Matrix:
    return [list(row) for row in m]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def transpose(m, ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out_row = []
        for col in bt:
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def rref(m, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    rows = copy_matrix(m)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != ONE:
            inv = piv.inverse()
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m, ncols: int | None = None) -> int:
    return len(rref(m, ncols)[1])


def nullspace(m, ncols: int) -> Matrix:
    """Basis of {x : m x = 0}, one vector per free column."""
    red, pivots = rref(m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(m, rhs) -> list[Scalar] | None:
    """One solution of m x = rhs (free variables set to 0), or None."""
    n = len(m[0]) if m else 0
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def determinant(m) -> Scalar:
    rows = copy_matrix(m)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[c])]
    return det


def inverse(m) -> Matrix | None:
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in red[:n]]


def reduce_against(v, basis: Matrix, pivots: list[int]) -> list[Scalar]:
    """Residual of v after eliminating the pivot columns of an rref basis."""
    v = list(v)
    for row, p in zip(basis, pivots):
        f = v[p]
        if f:
            v = [x - f * y if y else x for x, y in zip(v, row)]
    return v
