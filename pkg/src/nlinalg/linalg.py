"""Dense matrix routines over a single scalar field.

A grid is a tuple of row tuples of FieldValue.  Everything here is internal
plumbing for the componentwise public types: fraction-free (Bareiss)
determinants and exact reduced row echelon over the exact fields, partial
pivoting with a scale-aware threshold over the reals.
"""

from __future__ import annotations

from .fields import FieldDescriptor, FieldValue
from .polynomials import Polynomial

Grid = tuple  # tuple[tuple[FieldValue, ...], ...]


class SingularGrid(Exception):
    """Internal marker; public callers wrap it with a component index."""


def as_grid(field: FieldDescriptor, rows) -> Grid:
    out = tuple(tuple(field.value(x) for x in row) for row in rows)
    if not out:
        raise ValueError("a matrix needs at least one row")
    width = len(out[0])
    if width == 0 or any(len(row) != width for row in out):
        raise ValueError("matrix rows must be nonempty and equal length")
    return out


def shape(g: Grid) -> tuple[int, int]:
    return len(g), len(g[0])


def identity(field: FieldDescriptor, n: int) -> Grid:
    one, zero = field.one, field.zero
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def zeros(field: FieldDescriptor, rows: int, cols: int) -> Grid:
    zero = field.zero
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def add(a: Grid, b: Grid) -> Grid:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Grid, b: Grid) -> Grid:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Grid) -> Grid:
    return tuple(tuple(-x for x in row) for row in a)


def scale(c: FieldValue, a: Grid) -> Grid:
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a: Grid) -> Grid:
    return tuple(zip(*a))


def matmul(a: Grid, b: Grid) -> Grid:
    rows_a, inner = shape(a)
    inner_b, cols_b = shape(b)
    if inner != inner_b:
        raise ValueError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(
        tuple(_dot(row, col) for col in bt) for row in a
    )


def _dot(u, v) -> FieldValue:
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def mat_vec(a: Grid, v) -> tuple:
    return tuple(_dot(row, v) for row in a)


def mat_pow(a: Grid, k: int) -> Grid:
    n, m = shape(a)
    if n != m:
        raise ValueError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("negative matrix power")
    field = a[0][0].field
    out = identity(field, n)
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def grids_equal(a: Grid, b: Grid) -> bool:
    if shape(a) != shape(b):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_grid(a: Grid) -> bool:
    return all(x.is_zero() for row in a for x in row)


def _pivot_scale(a: Grid) -> float:
    """Scale factor for real-field zero tests: tolerance * max(1, |entries|)."""
    top = 1.0
    for row in a:
        for x in row:
            top = max(top, abs(x.v))
    return top


def _negligible(field: FieldDescriptor, x: FieldValue, scale_factor: float) -> bool:
    if field.exact:
        return x.is_zero()
    return abs(x.v) <= field.tolerance * scale_factor


def det(a: Grid) -> FieldValue:
    n, m = shape(a)
    if n != m:
        raise ValueError("determinant needs a square matrix")
    field = a[0][0].field
    if field.exact:
        return _det_bareiss(field, a)
    return _det_float(field, a)


def _det_bareiss(field, a: Grid) -> FieldValue:
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return field.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = field.zero
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def _det_float(field, a: Grid) -> FieldValue:
    n = len(a)
    m = [list(row) for row in a]
    scale_factor = _pivot_scale(a)
    sign = 1
    acc = field.one
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(m[i][k].v))
        if _negligible(field, m[pivot_row][k], scale_factor):
            return field.zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        acc = acc * pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    return -acc if sign < 0 else acc


def rref(a: Grid) -> tuple[list[list[FieldValue]], list[int]]:
    """Reduced row echelon form plus the pivot column list."""
    rows, cols = shape(a)
    field = a[0][0].field
    m = [list(row) for row in a]
    scale_factor = _pivot_scale(a) if not field.exact else 1.0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        if field.exact:
            pivot_row = next(
                (i for i in range(r, rows) if not m[i][c].is_zero()), None
            )
        else:
            pivot_row = max(range(r, rows), key=lambda i: abs(m[i][c].v))
            if _negligible(field, m[pivot_row][c], scale_factor):
                pivot_row = None
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        m[r] = [x / pivot for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Grid) -> int:
    return len(rref(a)[1])


def nullspace(a: Grid) -> list[tuple[FieldValue, ...]]:
    """Basis of the right null space, one vector per free column."""
    rows, cols = shape(a)
    field = a[0][0].field
    reduced, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero] * cols
        vec[f] = field.one
        for row_index, p in enumerate(pivots):
            vec[p] = -reduced[row_index][f]
        basis.append(tuple(vec))
    return basis


def inverse(a: Grid) -> Grid:
    n, m = shape(a)
    if n != m:
        raise ValueError("inverse needs a square matrix")
    field = a[0][0].field
    augmented = tuple(
        tuple(list(row) + list(idrow))
        for row, idrow in zip(a, identity(field, n))
    )
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise SingularGrid()
    return tuple(tuple(row[n:]) for row in reduced)


def solve(a: Grid, b) -> tuple[FieldValue, ...] | None:
    """One exact solution of a x = b (free variables zero), or None."""
    rows, cols = shape(a)
    field = a[0][0].field
    augmented = tuple(
        tuple(list(row) + [field.value(x)]) for row, x in zip(a, b)
    )
    reduced, pivots = rref(augmented)
    if cols in pivots:
        return None
    solution = [field.zero] * cols
    for row_index, p in enumerate(pivots):
        solution[p] = reduced[row_index][cols]
    return tuple(solution)


def charpoly(a: Grid) -> Polynomial:
    """Monic characteristic polynomial det(xI - a), exactly, over any field.

    Expansion by minors over the polynomial entries with memoization on the
    remaining-column mask; exact and characteristic-independent, and cheap at
    the component sizes this library works with.
    """
    n, m = shape(a)
    if n != m:
        raise ValueError("characteristic polynomial needs a square matrix")
    field = a[0][0].field
    x = Polynomial.x(field)
    entries = [
        [
            x - Polynomial.constant(field, a[i][j]) if i == j
            else Polynomial.constant(field, -a[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo = {0: Polynomial.constant(field, 1)}

    def minor(mask: int) -> Polynomial:
        if mask in memo:
            return memo[mask]
        row = n - bin(mask).count("1")
        total = Polynomial.zero(field)
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            term = entries[row][j] * minor(mask & ~bit)
            total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor((1 << n) - 1)


def eval_poly_at_matrix(p: Polynomial, a: Grid) -> Grid:
    n, m = shape(a)
    if n != m:
        raise ValueError("polynomial evaluation needs a square matrix")
    field = a[0][0].field
    acc = zeros(field, n, n)
    for c in reversed(p.coeffs):
        acc = matmul(acc, a)
        acc = add(acc, scale(c, identity(field, n)))
    return acc


def columns(a: Grid) -> list[tuple[FieldValue, ...]]:
    return [tuple(col) for col in zip(*a)]


def from_columns(cols) -> Grid:
    return tuple(zip(*cols))
