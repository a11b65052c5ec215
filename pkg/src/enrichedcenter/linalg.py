"""Dense exact linear algebra over CycScalar.

Matrices are lists of rows of :class:`~enrichedcenter.scalar.CycScalar`.
Everything is small (desk-scale fixtures), so plain Gaussian elimination
with exact field arithmetic is used throughout.  Canonical forms make
subspace comparison order-independent.
"""

from __future__ import annotations

from .scalar import CycScalar

Matrix = list  # list[list[CycScalar]]


def zeros(rows: int, cols: int) -> Matrix:
    z = CycScalar.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> Matrix:
    one, z = CycScalar.one(), CycScalar.zero()
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} @ {rb}x{cb}")
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            x = arow[k]
            if x.is_zero():
                continue
            brow = b[k]
            for j in range(cb):
                y = brow[j]
                if not y.is_zero():
                    orow[j] = orow[j] + x * y
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: CycScalar) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if shape(a) != shape(b):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def is_identity(a: Matrix) -> bool:
    r, c = shape(a)
    if r != c:
        return False
    for i in range(r):
        for j in range(c):
            if i == j:
                if not a[i][j].is_one():
                    return False
            elif not a[i][j].is_zero():
                return False
    return True


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m = [list(row) for row in m]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        m[r] = [inv * x for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix) -> Matrix:
    """Basis of the right kernel, returned as columns of a matrix."""
    rows, cols = shape(m)
    if cols == 0:
        return []
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis_cols = []
    z, one = CycScalar.zero(), CycScalar.one()
    for f in free:
        vec = [z] * cols
        vec[f] = one
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis_cols.append(vec)
    return [[basis_cols[j][i] for j in range(len(basis_cols))] for i in range(cols)]


def mat_inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of non-square matrix")
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red[:n]]


def solve_right(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a @ x = b column-wise; None if inconsistent."""
    rows, cols = shape(a)
    rb, cb = shape(b)
    if rb != rows:
        raise ValueError("shape mismatch in solve_right")
    aug = [list(a[i]) + list(b[i]) for i in range(rows)]
    red, pivots = rref(aug)
    if any(p >= cols for p in pivots):
        return None
    z = CycScalar.zero()
    x = [[z] * cb for _ in range(cols)]
    for r, p in enumerate(pivots):
        for j in range(cb):
            x[p][j] = red[r][cols + j]
    return x


def column_space_canonical(m: Matrix) -> Matrix:
    """Canonical basis of the column space, as columns.

    The canonical form is the reduced row echelon form of the transpose,
    transposed back, with zero columns dropped; equal spans give equal
    matrices regardless of the generating set or its order.
    """
    rows, cols = shape(m)
    if rows == 0 or cols == 0:
        return [[] for _ in range(rows)]
    t = [[m[i][j] for i in range(rows)] for j in range(cols)]
    red, pivots = rref(t)
    kept = red[: len(pivots)]
    return [[kept[j][i] for j in range(len(kept))] for i in range(rows)]


def intersect_column_spaces(a: Matrix, b: Matrix) -> Matrix:
    """Canonical basis of the intersection of two column spaces."""
    rows, ca = shape(a)
    rb, cb = shape(b)
    assert rb == rows
    if ca == 0 or cb == 0:
        return [[] for _ in range(rows)]
    stacked = [list(a[i]) + [-x for x in b[i]] for i in range(rows)]
    ker = nullspace(stacked)
    if not ker or not ker[0]:
        return [[] for _ in range(rows)]
    ker_cols = len(ker[0])
    top = [[ker[i][j] for j in range(ker_cols)] for i in range(ca)]
    return column_space_canonical(mat_mul(a, top))


def hstack(a: Matrix, b: Matrix) -> Matrix:
    return [list(ra) + list(rb) for ra, rb in zip(a, b)]
