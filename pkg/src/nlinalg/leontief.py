"""Closed (exchange) and open (production) economic n-models.

The closed model solves (I - A) p = 0 for a nonnegative price vector per
component, where A is column-stochastic and nonnegative; the open model
solves (I - C) x = d and calls C productive when (I - C) inverts with a
nonnegative inverse.  Both come with sign-relaxed variants: the relaxed
closed model may have many equilibrium directions and picks the best
candidate by a pluggable, deterministic scoring rule; the relaxed open model
solves regardless of signs and reports a per-component satisfaction verdict
from the sign of (I - C)^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import linalg
from .errors import (
    DimMismatch,
    DomainError,
    InvalidDemand,
    InvalidExchangeMatrix,
    NegativeEntry,
    NegativeProduction,
    SingularIMinusC,
)
from .fields import FieldDescriptor, FieldValue
from .markov import Convention, MarkovNChain, is_n_regular, stationary_distribution
from .nmatrix import NMatrix
from .nspace import NDims, NVector, NVectorSpace


def _entries_nonnegative(m: NMatrix) -> tuple[int, int, int] | None:
    field = m.field
    for ci, grid in enumerate(m.components):
        rows, cols = linalg.shape(grid)
        for i in range(rows):
            for j in range(cols):
                x = grid[i][j]
                ok = x.v >= 0 if field.exact else x.v >= -field.tolerance
                if not ok:
                    return ci, i, j
    return None


class ExchangeNMatrix:
    """Input-output matrix of the closed model, one block per good."""

    __slots__ = ("a", "relaxed")

    def __init__(self, a: NMatrix, relaxed: bool = False):
        a.require_square()
        if not relaxed:
            bad = _entries_nonnegative(a)
            if bad is not None:
                raise InvalidExchangeMatrix(
                    f"component {bad[0] + 1}: negative entry at "
                    f"row {bad[1] + 1}, column {bad[2] + 1}"
                )
            field = a.field
            for ci, grid in enumerate(a.components):
                n = linalg.shape(grid)[0]
                for j in range(n):
                    total = sum((grid[i][j] for i in range(n)), field.zero)
                    if not (total == field.one):
                        raise InvalidExchangeMatrix(
                            f"component {ci + 1}: column {j + 1} sums to "
                            f"{total}, expected 1"
                        )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "relaxed", relaxed)

    def __setattr__(self, name, value):
        raise AttributeError("ExchangeNMatrix is immutable")

    def sizes(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.a.shapes())


class ConsumptionNMatrix:
    """Consumption matrix of the open model, one block per unit."""

    __slots__ = ("c", "relaxed")

    def __init__(self, c: NMatrix, relaxed: bool = False):
        c.require_square()
        if not relaxed:
            bad = _entries_nonnegative(c)
            if bad is not None:
                raise NegativeEntry(*bad)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "relaxed", relaxed)

    def __setattr__(self, name, value):
        raise AttributeError("ConsumptionNMatrix is immutable")

    def sizes(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.c.shapes())


def _price_space(field: FieldDescriptor, sizes) -> NVectorSpace:
    return NVectorSpace(field, NDims(sizes, strict=False))


@dataclass(frozen=True)
class ClosedSolution:
    prices: NVector
    nullities: tuple[int, ...]
    unique: tuple[bool, ...]
    positivity_witnesses: tuple[int | None, ...]  # least m with A^m > 0


def closed_solve(e: ExchangeNMatrix) -> ClosedSolution:
    """Equilibrium prices of the standard closed model.

    A column-stochastic exchange matrix is exactly a column-convention
    transition matrix, so the nonnegative fixed vector and the uniqueness
    guarantee (some power strictly positive) come from the chain machinery.
    """
    if e.relaxed:
        raise DomainError("closed_solve needs a standard-mode exchange matrix")
    chain = MarkovNChain(e.a, Convention.COLUMN)
    stationary = stationary_distribution(chain)
    regularity = is_n_regular(chain)
    space = _price_space(e.a.field, e.sizes())
    prices = NVector(space, stationary.distribution.components)
    return ClosedSolution(
        prices,
        stationary.fixed_space_dimensions,
        stationary.unique,
        regularity.witnesses,
    )


Scorer = Callable[[list], tuple]


def max_min_scorer(candidates: list) -> tuple:
    """Pick the sum-normalized candidate maximizing its minimum entry;
    ties go to the lexicographically smallest."""
    best = None
    best_min = None
    for candidate in sorted(candidates):
        low = min(candidate)
        if best is None or low > best_min:
            best = candidate
            best_min = low
    return best


def _normalized_candidates(field, basis) -> list:
    seen = set()
    out = []
    raw = []
    for i, b in enumerate(basis):
        raw.append(b)
        raw.append(tuple(-x for x in b))
        for c in basis[i + 1:]:
            raw.append(tuple(x + y for x, y in zip(b, c)))
            raw.append(tuple(x - y for x, y in zip(b, c)))
    for vec in raw:
        total = sum(vec, field.zero)
        if total.is_zero():
            continue
        scaled = tuple(x / total for x in vec)
        key = tuple(x.v for x in scaled)
        if key in seen:
            continue
        seen.add(key)
        out.append(scaled)
    return out


@dataclass(frozen=True)
class SClosedComponent:
    basis: tuple
    candidates: tuple
    chosen: tuple | None
    empty: bool  # no equilibrium direction at all


@dataclass(frozen=True)
class SClosedSolution:
    per_component: tuple[SClosedComponent, ...]
    prices: NVector | None  # present when every component has a solution


def s_closed_solve(e: ExchangeNMatrix, scorer: Scorer | None = None,
                   rounds: int = 1) -> SClosedSolution:
    """Relaxed closed model: full null space plus a scored best candidate.

    An empty null space (no equilibrium) is reported per component, not
    fatal.  With rounds > 1, components whose chosen price has a negative
    entry drop that candidate and re-score, while accepted components stay
    fixed; the loop is bounded and deterministic.
    """
    field = e.a.field
    scorer = scorer or max_min_scorer
    basis_lists = []
    candidate_lists = []
    chosen = []
    for grid in e.a.components:
        n = linalg.shape(grid)[0]
        system = linalg.sub(linalg.identity(field, n), grid)
        basis = linalg.nullspace(system)
        candidates = _normalized_candidates(field, basis)
        basis_lists.append(tuple(basis))
        candidate_lists.append(candidates)
        chosen.append(scorer(candidates) if candidates else None)

    def accepted(vec) -> bool:
        return vec is not None and all(
            x.v >= 0 if field.exact else x.v >= -field.tolerance for x in vec
        )

    tried = [
        {tuple(x.v for x in c)} if c is not None else set()
        for c in chosen
    ]
    for _ in range(1, rounds):
        changed = False
        for i, candidates in enumerate(candidate_lists):
            if chosen[i] is None or accepted(chosen[i]):
                continue
            pool = [
                c for c in candidates if tuple(x.v for x in c) not in tried[i]
            ]
            if not pool:
                continue
            chosen[i] = scorer(pool)
            tried[i].add(tuple(x.v for x in chosen[i]))
            changed = True
        if not changed:
            break

    per = tuple(
        SClosedComponent(
            basis_lists[i],
            tuple(candidate_lists[i]),
            chosen[i],
            not basis_lists[i],
        )
        for i in range(e.a.n)
    )
    prices = None
    if all(c.chosen is not None for c in per):
        space = _price_space(field, e.sizes())
        prices = NVector(space, tuple(c.chosen for c in per))
    return SClosedSolution(per, prices)


@dataclass(frozen=True)
class ComponentConditions:
    row_sums_below_one: bool
    column_sums_below_one: bool
    surplus_vector_exists: bool  # some x >= 0 with x > Cx


@dataclass(frozen=True)
class ProductivityReport:
    productive: tuple[bool, ...]
    inverse: NMatrix  # (I - C)^{-1}
    conditions: tuple[ComponentConditions, ...]


def _i_minus(m: NMatrix) -> list:
    field = m.field
    return [
        linalg.sub(linalg.identity(field, linalg.shape(grid)[0]), grid)
        for grid in m.components
    ]


def productivity(c: ConsumptionNMatrix) -> ProductivityReport:
    """Invert I - C and test nonnegativity, with the sufficient conditions.

    The constructive surplus test feeds the all-ones demand through the
    inverse and checks x >= 0 and x > Cx entrywise.
    """
    field = c.c.field
    inverses = []
    verdicts = []
    conditions = []
    for index, grid in enumerate(c.c.components):
        n = linalg.shape(grid)[0]
        system = linalg.sub(linalg.identity(field, n), grid)
        try:
            inv = linalg.inverse(system)
        except linalg.SingularGrid:
            raise SingularIMinusC(index) from None
        inverses.append(inv)
        nonneg = all(
            x.v >= 0 if field.exact else x.v >= -field.tolerance
            for row in inv for x in row
        )
        verdicts.append(nonneg)
        row_sums = all(
            sum((x for x in row), field.zero) < field.one for row in grid
        )
        col_sums = all(
            sum((grid[i][j] for i in range(n)), field.zero) < field.one
            for j in range(n)
        )
        ones = tuple(field.one for _ in range(n))
        x = linalg.mat_vec(inv, ones)
        cx = linalg.mat_vec(grid, x)
        surplus = all(
            xv.v >= 0 if field.exact else xv.v >= -field.tolerance for xv in x
        ) and all((xv - cxv).v > 0 for xv, cxv in zip(x, cx))
        conditions.append(ComponentConditions(row_sums, col_sums, surplus))
    return ProductivityReport(
        tuple(verdicts), NMatrix(field, inverses), tuple(conditions)
    )


def _solve_production(c: ConsumptionNMatrix, d: NVector) -> list:
    field = c.c.field
    if tuple(len(comp) for comp in d.components) != c.sizes():
        raise DimMismatch("demand vector does not match the model sizes")
    out = []
    for index, (grid, demand) in enumerate(zip(c.c.components, d.components)):
        n = linalg.shape(grid)[0]
        system = linalg.sub(linalg.identity(field, n), grid)
        try:
            inv = linalg.inverse(system)
        except linalg.SingularGrid:
            raise SingularIMinusC(index) from None
        out.append(linalg.mat_vec(inv, demand))
    return out


def open_solve(c: ConsumptionNMatrix, d: NVector) -> NVector:
    """Production solving (I - C) x = d exactly, standard mode."""
    field = c.c.field
    if not c.relaxed:
        for comp in d.components:
            for x in comp:
                ok = x.v >= 0 if field.exact else x.v >= -field.tolerance
                if not ok:
                    raise InvalidDemand(f"negative demand entry {x}")
    solution = _solve_production(c, d)
    if not c.relaxed:
        offending = [
            (ci, i, str(x))
            for ci, comp in enumerate(solution)
            for i, x in enumerate(comp)
            if (x.v < 0 if field.exact else x.v < -field.tolerance)
        ]
        if offending:
            raise NegativeProduction(offending)
    space = _price_space(field, c.sizes())
    return NVector(space, tuple(tuple(comp) for comp in solution))


@dataclass(frozen=True)
class SOpenResult:
    production: NVector
    verdicts: tuple[str, ...]  # "Productive" | "NotUpToSatisfaction"


def s_open_solve(c: ConsumptionNMatrix, d: NVector) -> SOpenResult:
    """Relaxed open model: solve regardless of signs and report satisfaction
    per component from the sign of (I - C)^{-1}."""
    field = c.c.field
    solution = _solve_production(c, d)
    verdicts = []
    for index, grid in enumerate(c.c.components):
        n = linalg.shape(grid)[0]
        system = linalg.sub(linalg.identity(field, n), grid)
        inv = linalg.inverse(system)
        nonneg = all(
            x.v >= 0 if field.exact else x.v >= -field.tolerance
            for row in inv for x in row
        )
        verdicts.append("Productive" if nonneg else "NotUpToSatisfaction")
    space = _price_space(field, c.sizes())
    return SOpenResult(
        NVector(space, tuple(tuple(comp) for comp in solution)),
        tuple(verdicts),
    )
