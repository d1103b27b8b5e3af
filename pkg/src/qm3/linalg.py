"""Exact dense linear algebra over Q(w).

Matrices are lists of rows; vectors are lists.  Entries are ``CycNum``.
Everything here is plain Gaussian elimination, which is all the sizes in
this package (at most a few hundred unknowns) need.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, CycNum

Vector = list
Matrix = list


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k in range(inner):
            r = row[k]
            if r.is_zero():
                continue
            bk = b[k]
            for j in range(cols):
                if not bk[j].is_zero():
                    acc[j] = acc[j] + r * bk[j]
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[CycNum]) -> Vector:
    out = []
    for row in a:
        acc = ZERO
        for r, x in zip(row, v):
            if not r.is_zero() and not x.is_zero():
                acc = acc + r * x
        out.append(acc)
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def kron(a: Matrix, b: Matrix) -> Matrix:
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            aij = a[i][j]
            if aij.is_zero():
                continue
            for k in range(rb):
                for l in range(cb):
                    if not b[k][l].is_zero():
                        out[i * rb + k][j * cb + l] = aij * b[k][l]
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.  Does not modify ``a``."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(rows):
            if i != r:
                f = m[i][c]
                if not f.is_zero():
                    m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of ``{v : a v = 0}``."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


class InconsistentSystem(ValueError):
    pass


def solve(a: Matrix, b: Sequence[CycNum]) -> tuple[Vector, list[Vector]]:
    """Particular solution and nullspace basis of ``a x = b``.

    Raises ``InconsistentSystem`` if there is no solution.
    """
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise InconsistentSystem("linear system has no solution")
    x = [ZERO] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = m[i][ncols]
    return x, nullspace(a, ncols)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def det(a: Matrix) -> CycNum:
    m = [list(row) for row in a]
    n = len(m)
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d = d * m[c][c]
        inv = m[c][c].inv()
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if not f.is_zero():
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def column_space(vectors: Sequence[Sequence[CycNum]]) -> list[Vector]:
    """A basis (as vectors) of the span of ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    m, pivots = rref(vectors)
    return [m[i] for i in range(len(pivots))]


def span_rank(vectors: Sequence[Sequence[CycNum]]) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rank(vectors)


def coordinates(basis: Sequence[Sequence[CycNum]], v: Sequence[CycNum]) -> Vector | None:
    """Coefficients ``c`` with ``sum c_i basis_i = v``, or ``None`` if ``v`` is outside the span."""
    if not basis:
        return [] if all(x.is_zero() for x in v) else None
    a = transpose([list(b) for b in basis])
    try:
        x, _ = solve(a, list(v))
    except InconsistentSystem:
        return None
    return x


def intersect(u: Sequence[Sequence[CycNum]], w: Sequence[Sequence[CycNum]]) -> list[Vector]:
    """Basis of span(u) ∩ span(w)."""
    u = column_space(u)
    w = column_space(w)
    if not u or not w:
        return []
    a = transpose(u + [[-x for x in vec] for vec in w])
    out = []
    for sol in nullspace(a, len(u) + len(w)):
        vec = [ZERO] * len(u[0])
        for c, b in zip(sol[: len(u)], u):
            if not c.is_zero():
                vec = [x + c * y for x, y in zip(vec, b)]
        out.append(vec)
    return column_space(out)


def kernel_of_maps(maps: Sequence[Matrix], dim: int) -> list[Vector]:
    """Joint kernel of several ``dim``-column matrices."""
    rows = [row for m in maps for row in m]
    return nullspace(rows, dim) if rows else nullspace([], dim)


def image(a: Matrix) -> list[Vector]:
    return column_space(transpose(a))


def trace(a: Matrix) -> CycNum:
    return sum((a[i][i] for i in range(len(a))), ZERO)
