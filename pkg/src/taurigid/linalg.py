"""Dense exact linear algebra over the rationals.

Matrices are lists of rows of Fractions, mapping column vectors on the
left (an r x c matrix sends F^c to F^r).  Everything here is fraction-free
of floating point; there are no tolerances anywhere.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = Fraction(1)
    return mat


def from_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def shape(mat: Matrix) -> tuple[int, int]:
    return len(mat), len(mat[0]) if mat else 0


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} @ {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        for k in range(ca):
            x = arow[k]
            if x == 0:
                continue
            brow = b[k]
            orow = out[i]
            for j in range(cb):
                orow[j] += x * brow[j]
    return out


def is_zero(mat: Matrix) -> bool:
    return all(x == 0 for row in mat for x in row)


def _echelon(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Row-reduce a copy of ``mat``; returns (rref, pivot column list)."""
    m = [row[:] for row in mat]
    nrows, ncols = shape(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: Matrix) -> int:
    if not mat or not mat[0]:
        return 0
    return len(_echelon(mat)[1])


def nullspace(mat: Matrix, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : mat @ v = 0}, as a list of column vectors.

    ``cols`` must be given when ``mat`` has no rows (the kernel is then all
    of F^cols).
    """
    if not mat:
        if cols is None:
            raise ValueError("nullspace of empty matrix needs explicit column count")
        return [[Fraction(i == j) for i in range(cols)] for j in range(cols)]
    ncols = len(mat[0])
    rref, pivots = _echelon(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def columns(mat: Matrix) -> list[list[Fraction]]:
    nrows, ncols = shape(mat)
    return [[mat[r][c] for r in range(nrows)] for c in range(ncols)]


def from_columns(cols: list[list[Fraction]], rows: int | None = None) -> Matrix:
    if not cols:
        return [[] for _ in range(rows or 0)]
    nrows = len(cols[0])
    return [[col[r] for col in cols] for r in range(nrows)]


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Some X with a @ X = b; raises ValueError if the system is inconsistent."""
    nrows, ncols = shape(a)
    rb, cb = shape(b)
    if rb != nrows:
        raise ValueError("incompatible right-hand side")
    if ncols == 0:
        if not is_zero(b):
            raise ValueError("inconsistent system")
        return []
    aug = [a[r] + b[r] for r in range(nrows)]
    rref, pivots = _echelon(aug)
    for pc in pivots:
        if pc >= ncols:
            raise ValueError("inconsistent system")
    x = zeros(ncols, cb)
    for r, pc in enumerate(pivots):
        for j in range(cb):
            x[pc][j] = rref[r][ncols + j]
    return x


def is_invertible(mat: Matrix) -> bool:
    nrows, ncols = shape(mat)
    return nrows == ncols and rank(mat) == nrows
