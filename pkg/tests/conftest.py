import random
from fractions import Fraction
from pathlib import Path

import pytest

from nlinalg import FieldDescriptor, NDims, NMatrix, NVectorSpace
import nlinalg.linalg as la

FIXTURES = Path(__file__).parent / "fixtures"

Q = FieldDescriptor.rational()
R = FieldDescriptor.real()
Z5 = FieldDescriptor.prime(5)
Z7 = FieldDescriptor.prime(7)


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def rng(seed: int) -> random.Random:
    return random.Random(seed)


# -- random instance makers ---------------------------------------------------

def rand_fraction(r: random.Random, span: int = 5) -> Fraction:
    return Fraction(r.randint(-span, span), r.randint(1, 3))


def rand_grid(r: random.Random, rows: int, cols: int, span: int = 5):
    return [[rand_fraction(r, span) for _ in range(cols)] for _ in range(rows)]


def rand_int_grid(r: random.Random, rows: int, cols: int, span: int = 4):
    return [[r.randint(-span, span) for _ in range(cols)] for _ in range(rows)]


def rand_nonsingular(r: random.Random, n: int, span: int = 3):
    while True:
        rows = rand_int_grid(r, n, n, span)
        grid = la.as_grid(Q, rows)
        if not la.det(grid).is_zero():
            return rows


def rand_stochastic_rows(r: random.Random, n: int):
    """Row-stochastic matrix with exact rational entries."""
    rows = []
    for _ in range(n):
        weights = [r.randint(0, 4) for _ in range(n)]
        if sum(weights) == 0:
            weights[r.randrange(n)] = 1
        total = sum(weights)
        rows.append([Fraction(w, total) for w in weights])
    return rows


def rand_column_stochastic(r: random.Random, n: int):
    rows = rand_stochastic_rows(r, n)
    return [list(col) for col in zip(*rows)]


def rand_subunit_nonnegative(r: random.Random, n: int):
    """Nonnegative matrix with every row sum strictly below one."""
    rows = []
    for _ in range(n):
        weights = [r.randint(0, 3) for _ in range(n)]
        denominator = 3 * n + r.randint(1, 3)
        rows.append([Fraction(w, denominator) for w in weights])
    return rows


def conjugated(r: random.Random, diagonal_entries, bumps=()):
    """P (D + N) P^{-1} with integer nonsingular P; bumps are (row, col)
    positions receiving 1 above the diagonal inside equal-eigenvalue runs."""
    n = len(diagonal_entries)
    inner = [
        [
            Fraction(diagonal_entries[i]) if i == j else Fraction(0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    for i, j in bumps:
        inner[i][j] = Fraction(1)
    p = la.as_grid(Q, rand_nonsingular(r, n))
    product = la.matmul(p, la.matmul(la.as_grid(Q, inner), la.inverse(p)))
    return [[x.v for x in row] for row in product]


def rand_diagonalizable(r: random.Random, n: int):
    values = r.sample(range(-4, 5), k=r.randint(1, n))
    diagonal = [values[i % len(values)] for i in range(n)]
    return conjugated(r, diagonal)


def rand_split_spectrum(r: random.Random, n: int):
    """Minimal polynomial splits over Q; possibly nontrivial nilpotent part."""
    values = r.sample(range(-3, 4), k=r.randint(1, max(1, n - 1)))
    diagonal = sorted(values[i % len(values)] for i in range(n))
    bumps = [
        (i, i + 1)
        for i in range(n - 1)
        if diagonal[i] == diagonal[i + 1] and r.random() < 0.7
    ]
    return conjugated(r, diagonal, bumps)


def nmatrix_pair(r: random.Random, sizes, maker) -> NMatrix:
    return NMatrix(Q, [maker(r, n) for n in sizes])


def space(dims, field=Q, strict=True) -> NVectorSpace:
    return NVectorSpace(field, NDims(dims, strict=strict))
