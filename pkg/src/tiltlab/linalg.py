"""Exact linear algebra over the rationals.

Matrices are tuples of tuples of Fraction, kept immutable so that reps and
morphisms can be hashed and cached.  Everything here is deterministic: row
echelon forms use the leftmost pivot, and solution bases are echelonized.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple((ZERO,) * ncols for _ in range(nrows))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def shape_matches(a: Matrix, nrows: int, ncols: int) -> bool:
    """Shape check tolerant of zero-row matrices, whose column count is lost."""
    if nrows == 0:
        return len(a) == 0
    return shape(a) == (nrows, ncols)


def eq_loose(a: Matrix, b: Matrix) -> bool:
    """Equality that identifies all-zero matrices regardless of degenerate shape."""
    return a == b or (is_zero(a) and is_zero(b))


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a @ b; empty dimensions give the appropriately shaped zero."""
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        # a has zero columns exactly when b has zero rows for valid composites
        if k == 0 and k2 == 0:
            return zeros(n, m)
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) if m else ()
        for row in a
    )


def mul_shaped(a: Matrix, b: Matrix, nrows: int, ncols: int, inner: int) -> Matrix:
    """Product with explicit shapes; degenerate inner dimension gives zeros."""
    if nrows == 0 or ncols == 0 or inner == 0:
        return zeros(nrows, ncols)
    return mul(a, b)


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def hstack(blocks: Sequence[Matrix], nrows: int) -> Matrix:
    rows = []
    for i in range(nrows):
        row: list[Fraction] = []
        for b in blocks:
            row.extend(b[i] if b else ())
        rows.append(tuple(row))
    return tuple(rows)


def vstack(blocks: Sequence[Matrix], ncols: int) -> Matrix:
    rows: list[tuple[Fraction, ...]] = []
    for b in blocks:
        for row in b:
            rows.append(row)
    return tuple(rows) if rows else tuple()


def block_matrix(grid: Sequence[Sequence[Matrix]], row_dims: Sequence[int], col_dims: Sequence[int]) -> Matrix:
    """Assemble a block matrix; grid[i][j] has shape (row_dims[i], col_dims[j])."""
    out: list[tuple[Fraction, ...]] = []
    for i, bi in enumerate(grid):
        for r in range(row_dims[i]):
            row: list[Fraction] = []
            for j, b in enumerate(bi):
                if row_dims[i] and col_dims[j]:
                    row.extend(b[r])
                else:
                    row.extend((ZERO,) * col_dims[j])
            out.append(tuple(row))
    return tuple(out)


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with its pivot column list."""
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in m), pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[tuple[Fraction, ...]]:
    """Echelonized basis of the right kernel (deterministic, free vars ascending)."""
    nrows, ncols = shape(a)
    if ncols == 0:
        return []
    if nrows == 0:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    r, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(tuple(v))
    return basis


def column_space_complement(a: Matrix) -> list[int]:
    """Indices of standard basis vectors completing the column space of a."""
    nrows, ncols = shape(a)
    ext = hstack([a, identity(nrows)], nrows) if ncols else identity(nrows)
    _, pivots = rref(ext)
    return [p - ncols for p in pivots if p >= ncols]


def solve(a: Matrix, b: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """One solution of a x = b, or None if inconsistent."""
    nrows, ncols = shape(a)
    aug = tuple(row + (bv,) for row, bv in zip(a, b)) if ncols else tuple((bv,) for bv in b)
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return tuple(x)


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a X = b columnwise; None if any column is inconsistent."""
    nrows, ncols = shape(a)
    _, bcols = shape(b)
    cols = []
    for j in range(bcols):
        x = solve(a, tuple(b[i][j] for i in range(nrows)))
        if x is None:
            return None
        cols.append(x)
    return tuple(tuple(c[i] for c in cols) for i in range(ncols))


def span_rref(vectors: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Canonical (rref, zero rows dropped) matrix whose rows span the given set."""
    if not vectors:
        return tuple()
    r, pivots = rref(tuple(tuple(v) for v in vectors))
    return tuple(r[i] for i in range(len(pivots)))


def in_span(vector: Sequence[Fraction], span: Matrix) -> bool:
    rows = list(span) + [tuple(vector)]
    return rank(tuple(rows)) == len(span)


def int_matrix_det(a: Sequence[Sequence[int]]) -> int:
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    det = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return 0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = ONE / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return det.numerator
