"""Eigen-theory of square componentwise operators over exact fields.

Characteristic and minimal polynomials, in-field eigenvalues with
eigenspaces, diagonalizability, spectral projections, primary decomposition,
the diagonalizable-plus-nilpotent splitting, and a verifier checking that
every component annihilates its own characteristic polynomial.

Eigenvalues inside reports are always listed in ascending canonical order.
The diagonal form returned by is_n_diagonalizable keeps the diagonal order
of components that are already triangular (their diagonal is the natural
eigenvalue listing) and uses ascending order with algebraic multiplicities
otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from ._parallel import component_map
from .errors import (
    ExactFieldRequired,
    MinimalPolynomialDoesNotSplit,
    NotDiagonalizable,
    ShapeMismatch,
    TooFewComponents,
)
from .fields import FieldValue
from .nmatrix import NMatrix
from .polynomials import Polynomial, rational_roots, squarefree_parts


class NPolynomial:
    """One univariate polynomial per component over a shared field."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if len(components) < 2:
            raise TooFewComponents("an n-polynomial needs at least two components")
        field = components[0].field
        for p in components[1:]:
            field.require_same(p.field)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("NPolynomial is immutable")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def is_monic(self) -> bool:
        return all(p.is_monic for p in self.components)

    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.components)

    def __eq__(self, other):
        if not isinstance(other, NPolynomial):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return " u ".join(p.factored_str() for p in self.components)

    def factored_strs(self) -> tuple[str, ...]:
        return tuple(p.factored_str() for p in self.components)


def _require_exact(a: NMatrix, what: str):
    if not a.field.exact:
        raise ExactFieldRequired(f"{what} needs an exact field")


def char_npoly(a: NMatrix, parallel: bool = False) -> NPolynomial:
    """Monic characteristic polynomial per component, computed exactly."""
    a.require_square()
    return NPolynomial(component_map(linalg.charpoly, a.components, parallel))


@dataclass(frozen=True)
class EigenPair:
    value: FieldValue
    algebraic: int
    geometric: int
    basis: tuple  # eigenspace basis vectors


@dataclass(frozen=True)
class ComponentEigen:
    pairs: tuple[EigenPair, ...]  # ascending by eigenvalue
    cofactor: Polynomial  # root-free part of the characteristic polynomial

    @property
    def values(self) -> tuple[FieldValue, ...]:
        return tuple(p.value for p in self.pairs)


@dataclass(frozen=True)
class EigenReport:
    components: tuple[ComponentEigen, ...]


def eigen(a: NMatrix, parallel: bool = False) -> EigenReport:
    """In-field eigenvalues with multiplicities and eigenspace bases."""
    a.require_square()
    _require_exact(a, "eigen decomposition")
    charpolys = char_npoly(a, parallel).components

    def one_component(args):
        grid, poly = args
        n = linalg.shape(grid)[0]
        roots, cofactor = rational_roots(poly)
        pairs = []
        for value, mult in roots:
            shifted = linalg.sub(
                grid, linalg.scale(value, linalg.identity(a.field, n))
            )
            basis = tuple(linalg.nullspace(shifted))
            pairs.append(EigenPair(value, mult, len(basis), basis))
        total = sum(p.algebraic for p in pairs) + max(cofactor.degree, 0)
        assert total == n, "eigenvalue bookkeeping mismatch (internal error)"
        return ComponentEigen(tuple(pairs), cofactor)

    return EigenReport(
        tuple(
            component_map(
                one_component, zip(a.components, charpolys), parallel
            )
        )
    )


def eigen_combinations(report: EigenReport) -> int:
    """Number of componentwise eigenvalue tuples: the product of the
    distinct-eigenvalue counts."""
    total = 1
    for comp in report.components:
        total *= len(comp.pairs)
    return total


def _min_poly_component(grid, poly: Polynomial) -> Polynomial:
    """Least-degree monic divisor of the characteristic polynomial that
    annihilates the matrix.

    Divisors are assembled from the in-field linear factors plus the
    squarefree parts of the root-free cofactor; every irreducible factor of
    the characteristic polynomial must appear, so exponents start at one.
    """
    field = poly.field
    roots, cofactor = rational_roots(poly)
    factors = [(Polynomial.linear(value), mult) for value, mult in roots]
    if cofactor.degree > 0:
        factors.extend(squarefree_parts(cofactor))
    exponent_ranges = [range(1, mult + 1) for _, mult in factors]
    candidates = sorted(
        itertools.product(*exponent_ranges),
        key=lambda exps: (
            sum(e * f.degree for e, (f, _) in zip(exps, factors)),
            exps,
        ),
    )
    for exps in candidates:
        candidate = Polynomial.constant(field, 1)
        for e, (factor, _) in zip(exps, factors):
            candidate = candidate * factor ** e
        if linalg.is_zero_grid(linalg.eval_poly_at_matrix(candidate, grid)):
            return candidate.monic()
    raise AssertionError("characteristic polynomial failed to annihilate")


def min_npoly(a: NMatrix, parallel: bool = False) -> NPolynomial:
    a.require_square()
    _require_exact(a, "minimal polynomial")
    charpolys = char_npoly(a, parallel).components
    return NPolynomial(
        component_map(
            lambda args: _min_poly_component(*args),
            zip(a.components, charpolys),
            parallel,
        )
    )


def _is_triangular(grid) -> bool:
    n = linalg.shape(grid)[0]
    upper = all(
        grid[i][j].is_zero() for i in range(n) for j in range(i)
    )
    if upper:
        return True
    return all(
        grid[i][j].is_zero() for i in range(n) for j in range(i + 1, n)
    )


@dataclass(frozen=True)
class DiagReport:
    diagonalizable: bool
    diagonal: NMatrix | None
    reasons: tuple[str, ...]  # per component: "ok", "not-split", "repeated-root"


def is_n_diagonalizable(a: NMatrix) -> DiagReport:
    """True iff every component's minimal polynomial is a product of distinct
    in-field linear factors; returns the diagonal form when true."""
    a.require_square()
    _require_exact(a, "diagonalizability")
    minimal = min_npoly(a)
    reasons = []
    for p in minimal.components:
        roots, cofactor = rational_roots(p)
        if cofactor.degree > 0:
            reasons.append("not-split")
        elif any(mult > 1 for _, mult in roots):
            reasons.append("repeated-root")
        else:
            reasons.append("ok")
    if any(r != "ok" for r in reasons):
        return DiagReport(False, None, tuple(reasons))

    report = eigen(a)
    diagonal = []
    for grid, comp in zip(a.components, report.components):
        if _is_triangular(grid):
            n = linalg.shape(grid)[0]
            entries = [grid[i][i] for i in range(n)]
        else:
            entries = []
            for pair in comp.pairs:
                entries.extend([pair.value] * pair.algebraic)
        size = len(entries)
        diagonal.append(
            tuple(
                tuple(
                    entries[i] if i == j else a.field.zero
                    for j in range(size)
                )
                for i in range(size)
            )
        )
    return DiagReport(True, NMatrix(a.field, diagonal), tuple(reasons))


@dataclass(frozen=True)
class ProjectionSet:
    eigenvalues: tuple[tuple[FieldValue, ...], ...]  # ascending per component
    projections: tuple[tuple, ...]  # grids aligned with the eigenvalues


def eigen_projections(a: NMatrix) -> ProjectionSet:
    """Spectral projections of a diagonalizable operator.

    E_j = prod_{k != j} (A - c_k I) / (c_j - c_k); they are idempotent,
    mutually annihilating, sum to the identity, and reconstruct the operator
    as sum c_j E_j, all exactly.
    """
    diag = is_n_diagonalizable(a)
    if not diag.diagonalizable:
        raise NotDiagonalizable(f"component verdicts: {diag.reasons}")
    report = eigen(a)
    all_values = []
    all_projections = []
    for grid, comp in zip(a.components, report.components):
        n = linalg.shape(grid)[0]
        eye = linalg.identity(a.field, n)
        values = comp.values
        projections = []
        for j, cj in enumerate(values):
            product = eye
            for k, ck in enumerate(values):
                if k == j:
                    continue
                shifted = linalg.sub(grid, linalg.scale(ck, eye))
                product = linalg.scale(
                    a.field.one / (cj - ck), linalg.matmul(product, shifted)
                )
            projections.append(product)
        all_values.append(values)
        all_projections.append(tuple(projections))
    return ProjectionSet(tuple(all_values), tuple(all_projections))


def _poly_egcd(a: Polynomial, b: Polynomial):
    """Extended Euclid: monic g plus u, v with u a + v b = g."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.constant(field, 1), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.constant(field, 1)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.leading
    inv = field.one / lead
    return r0 * inv, s0 * inv, t0 * inv


def _generalized_projections(grid, minimal: Polynomial):
    """Projections onto the primary (generalized eigen-) subspaces.

    Partial fractions modulo the primary factors of the minimal polynomial:
    with p = prod (x - c_j)^{r_j} and g_j = p / (x - c_j)^{r_j}, pick u_j
    with u_j g_j = 1 mod (x - c_j)^{r_j}; then E_j = (u_j g_j)(A).
    Valid with repeated roots, where plain interpolation is not.
    """
    field = minimal.field
    roots, cofactor = rational_roots(minimal)
    if cofactor.degree > 0:
        raise MinimalPolynomialDoesNotSplit(
            f"unsplit factor {cofactor.factored_str()}"
        )
    values = []
    exponents = []
    projections = []
    for value, mult in roots:
        primary = Polynomial.linear(value) ** mult
        complement = minimal // primary
        g, u, _ = _poly_egcd(complement, primary)
        assert g.degree == 0, "primary factors must be coprime"
        projections.append(
            linalg.eval_poly_at_matrix(u * complement, grid)
        )
        values.append(value)
        exponents.append(mult)
    return values, exponents, projections


@dataclass(frozen=True)
class PrimaryComponent:
    factor: Polynomial  # monic irreducible-in-field block
    exponent: int  # its multiplicity in the minimal polynomial
    basis: tuple  # basis of null(factor(A)^exponent)


def primary_decomposition(a: NMatrix) -> tuple[tuple[PrimaryComponent, ...], ...]:
    """Generalized-eigenspace decomposition from the minimal polynomial.

    Per component, the bases of null(p_k(A)^{r_k}) concatenate to a basis of
    the whole component and each subspace is invariant under the operator.
    """
    a.require_square()
    _require_exact(a, "primary decomposition")
    minimal = min_npoly(a)
    out = []
    for grid, p in zip(a.components, minimal.components):
        n = linalg.shape(grid)[0]
        roots, cofactor = rational_roots(p)
        factors = [(Polynomial.linear(v), m) for v, m in roots]
        if cofactor.degree > 0:
            factors.extend(squarefree_parts(cofactor))
        pieces = []
        total = 0
        for factor, exponent in factors:
            power = linalg.eval_poly_at_matrix(factor ** exponent, grid)
            basis = tuple(linalg.nullspace(power))
            total += len(basis)
            pieces.append(PrimaryComponent(factor, exponent, basis))
        assert total == n, "primary subspaces must fill the component"
        out.append(tuple(pieces))
    return tuple(out)


@dataclass(frozen=True)
class DNPair:
    d: NMatrix
    n_part: NMatrix
    nilpotency_indices: tuple[int, ...]


def dn_decompose(a: NMatrix) -> DNPair:
    """Split each component into commuting diagonalizable plus nilpotent parts.

    Requires every component's minimal polynomial to factor into linear
    factors over the field.  D = sum c_j E_j over the generalized
    projections, N = A - D; the reported index is the least r with N^r = 0.
    """
    a.require_square()
    _require_exact(a, "diagonalizable-plus-nilpotent splitting")
    minimal = min_npoly(a)
    d_parts = []
    n_parts = []
    indices = []
    for grid, p in zip(a.components, minimal.components):
        size = linalg.shape(grid)[0]
        values, exponents, projections = _generalized_projections(grid, p)
        d_grid = linalg.zeros(a.field, size, size)
        for value, projection in zip(values, projections):
            d_grid = linalg.add(d_grid, linalg.scale(value, projection))
        n_grid = linalg.sub(grid, d_grid)
        index = 1
        power = n_grid
        bound = max(exponents)
        while not linalg.is_zero_grid(power):
            index += 1
            assert index <= bound, "nilpotency index exceeded the bound"
            power = linalg.matmul(power, n_grid)
        d_parts.append(d_grid)
        n_parts.append(n_grid)
        indices.append(index)
    return DNPair(
        NMatrix(a.field, d_parts), NMatrix(a.field, n_parts), tuple(indices)
    )


@dataclass(frozen=True)
class CayleyReport:
    all_zero: bool
    per_component: tuple[bool, ...]


def cayley_hamilton_check(a: NMatrix, parallel: bool = False) -> CayleyReport:
    """Substitute each component into its own characteristic polynomial."""
    a.require_square()
    charpolys = char_npoly(a, parallel).components
    verdicts = tuple(
        linalg.is_zero_grid(linalg.eval_poly_at_matrix(p, grid))
        for grid, p in zip(a.components, charpolys)
    )
    return CayleyReport(all(verdicts), verdicts)


def is_invariant(a: NMatrix, subspace_bases) -> tuple[bool, tuple[bool, ...]]:
    """Does each component map its stated subspace into itself?"""
    a.require_square()
    subspace_bases = tuple(tuple(b) for b in subspace_bases)
    if len(subspace_bases) != a.n:
        raise ShapeMismatch(f"expected {a.n} component bases")
    verdicts = []
    for grid, basis in zip(a.components, subspace_bases):
        if not basis:
            verdicts.append(True)
            continue
        span = linalg.from_columns(basis)
        ok = True
        for vec in basis:
            image = linalg.mat_vec(grid, vec)
            if linalg.solve(span, image) is None:
                ok = False
                break
        verdicts.append(ok)
    return all(verdicts), tuple(verdicts)


def commutes_with_projections(a: NMatrix, e: ProjectionSet) -> bool:
    """A_i E_j^i = E_j^i A_i, exactly, for every component and projection."""
    a.require_square()
    if len(e.projections) != a.n:
        raise ShapeMismatch("projection set does not match the component count")
    for grid, projections in zip(a.components, e.projections):
        for projection in projections:
            if linalg.shape(projection) != linalg.shape(grid):
                raise ShapeMismatch("projection shape mismatch")
            left = linalg.matmul(grid, projection)
            right = linalg.matmul(projection, grid)
            if not linalg.grids_equal(left, right):
                return False
    return True
