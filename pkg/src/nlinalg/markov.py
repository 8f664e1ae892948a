"""Markov n-chains: lockstep tuples of finite-state chains.

A transition n-matrix validates under either stochasticity convention (row
sums one, or column sums one; conversion is the transpose).  State
classification works on the positive-entry digraph of each component:
communicating classes via mutual reachability, essential classes as those
with no exit, closed sets as class closures, absorbing states as unit
self-loops.  Stationary distributions are solved exactly over the rationals
per recurrent class.  The spectral path (simple real spectra only) factors
each component as sum lambda_i u_i v_i' with v_i' u_i = 1 and reconstructs
powers from the eigenvalues.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from ._parallel import component_map
from .errors import (
    ComplexSpectrum,
    ConventionMismatch,
    DimMismatch,
    DomainError,
    InvalidProbability,
    NegativeEntry,
    RepeatedEigenvalues,
    StochasticityViolation,
)
from .fields import FieldDescriptor, FieldValue
from .nmatrix import NMatrix


class Convention(enum.Enum):
    ROW = "row"
    COLUMN = "column"


def _nonnegative(field: FieldDescriptor, x: FieldValue) -> bool:
    if field.exact:
        return x.v >= 0
    return x.v >= -field.tolerance


class MarkovNChain:
    __slots__ = ("p", "convention", "state_labels")

    def __init__(self, p: NMatrix, convention: Convention = Convention.ROW,
                 state_labels=None):
        p.require_square()
        field = p.field
        for ci, grid in enumerate(p.components):
            n = linalg.shape(grid)[0]
            for i in range(n):
                for j in range(n):
                    if not _nonnegative(field, grid[i][j]):
                        raise NegativeEntry(ci, i, j)
            for k in range(n):
                if convention is Convention.ROW:
                    total = sum((grid[k][j] for j in range(n)), field.zero)
                else:
                    total = sum((grid[i][k] for i in range(n)), field.zero)
                if not (total == field.one):
                    raise StochasticityViolation(ci, k, total)
        if state_labels is None:
            state_labels = [
                [str(i + 1) for i in range(linalg.shape(grid)[0])]
                for grid in p.components
            ]
        labels = tuple(tuple(str(x) for x in group) for group in state_labels)
        for grid, group in zip(p.components, labels):
            if len(group) != linalg.shape(grid)[0]:
                raise DimMismatch("label count does not match the state count")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "convention", convention)
        object.__setattr__(self, "state_labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("MarkovNChain is immutable")

    @property
    def field(self) -> FieldDescriptor:
        return self.p.field

    @property
    def n(self) -> int:
        return self.p.n

    def sizes(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.p.shapes())

    def transition_probability(self, component: int, source: int,
                               target: int) -> FieldValue:
        grid = self.p.components[component]
        if self.convention is Convention.ROW:
            return grid[source][target]
        return grid[target][source]

    def __repr__(self):
        return (
            f"MarkovNChain(sizes={self.sizes()}, "
            f"convention={self.convention.value})"
        )


def markov_new(p: NMatrix, convention: Convention = Convention.ROW,
               state_labels=None) -> MarkovNChain:
    return MarkovNChain(p, convention, state_labels)


class StateNVector:
    """A probability vector per component: nonnegative entries summing to one."""

    __slots__ = ("chain", "components")

    def __init__(self, chain: MarkovNChain, components):
        field = chain.field
        components = tuple(
            tuple(field.value(x) for x in comp) for comp in components
        )
        if len(components) != chain.n:
            raise DimMismatch(f"expected {chain.n} components")
        for comp, size in zip(components, chain.sizes()):
            if len(comp) != size:
                raise DimMismatch(
                    f"component of length {len(comp)} against {size} states"
                )
            total = sum(comp, field.zero)
            if not (total == field.one):
                raise DomainError(f"probabilities sum to {total}, expected 1")
            for x in comp:
                if not _nonnegative(field, x):
                    raise DomainError(f"negative probability {x}")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("StateNVector is immutable")

    def __eq__(self, other):
        if not isinstance(other, StateNVector):
            return NotImplemented
        return all(
            x == y
            for a, b in zip(self.components, other.components)
            for x, y in zip(a, b)
        )

    def __repr__(self):
        inner = " u ".join(
            "(" + ", ".join(str(x) for x in comp) + ")"
            for comp in self.components
        )
        return f"StateNVector[{inner}]"


def evolve(c: MarkovNChain, x: StateNVector, k: int = 1) -> StateNVector:
    """Apply the chain k times; the output is again a state vector."""
    if x.chain is not c and x.chain.sizes() != c.sizes():
        raise DimMismatch("state vector does not match the chain")
    if k < 1:
        raise ValueError("need at least one step")
    components = list(x.components)
    for _ in range(k):
        stepped = []
        for grid, comp in zip(c.p.components, components):
            if c.convention is Convention.ROW:
                stepped.append(linalg.mat_vec(linalg.transpose(grid), comp))
            else:
                stepped.append(linalg.mat_vec(grid, comp))
        components = stepped
    return StateNVector(c, tuple(components))


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    witnesses: tuple[int | None, ...]  # least power with all entries positive


def is_n_regular(c: MarkovNChain, max_power: int | None = None) -> RegularityReport:
    """Search powers for strict positivity, up to the Wielandt bound per
    component unless a cap is given."""
    witnesses = []
    for grid in c.p.components:
        n = linalg.shape(grid)[0]
        bound = max_power if max_power is not None else (n - 1) ** 2 + 1
        power = grid
        witness = None
        for m in range(1, bound + 1):
            if all(x.v > 0 for row in power for x in row):
                witness = m
                break
            power = linalg.matmul(power, grid)
        witnesses.append(witness)
    return RegularityReport(all(w is not None for w in witnesses),
                            tuple(witnesses))


@dataclass(frozen=True)
class ComponentClassification:
    classes: tuple[tuple[int, ...], ...]  # communicating classes, 0-based
    essential: tuple[bool, ...]  # per state
    closed_sets: tuple[tuple[int, ...], ...]
    absorbing: tuple[int, ...]
    irreducible: bool


@dataclass(frozen=True)
class SemiEntry:
    count: int
    label: str  # "n", "hyper", "semi" or "none"


@dataclass(frozen=True)
class StateClassification:
    per_component: tuple[ComponentClassification, ...]
    n_irreducible: bool
    n_absorbing: tuple[str, ...] | None  # labels, when unique per component
    semi: dict


def _semi_label(count: int, n: int) -> str:
    if count == n:
        return "n"
    if count == n - 1:
        return "hyper"
    if count > 0:
        return "semi"
    return "none"


def _classify_component(args) -> ComponentClassification:
    chain, component = args
    grid = chain.p.components[component]
    n = linalg.shape(grid)[0]
    # Reachability closure of the positive-entry digraph (reflexive).
    reach = [
        [
            i == j or chain.transition_probability(component, i, j).v > 0
            for j in range(n)
        ]
        for i in range(n)
    ]
    for k in range(n):
        row_k = reach[k]
        for i in range(n):
            if reach[i][k]:
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    assigned = [None] * n
    classes = []
    for i in range(n):
        if assigned[i] is not None:
            continue
        members = tuple(
            j for j in range(n) if reach[i][j] and reach[j][i]
        )
        for j in members:
            assigned[j] = len(classes)
        classes.append(members)
    essential_class = []
    for members in classes:
        closure = {j for i in members for j in range(n) if reach[i][j]}
        essential_class.append(closure == set(members))
    essential = tuple(
        essential_class[assigned[i]] for i in range(n)
    )
    closed = []
    for members in classes:
        closure = tuple(
            sorted({j for i in members for j in range(n) if reach[i][j]})
        )
        if closure not in closed:
            closed.append(closure)
    absorbing = tuple(
        i
        for i in range(n)
        if chain.transition_probability(component, i, i) == chain.field.one
    )
    return ComponentClassification(
        tuple(classes), essential, tuple(closed), absorbing, len(classes) == 1
    )


def classify_states(c: MarkovNChain, parallel: bool = False) -> StateClassification:
    per = tuple(
        component_map(
            _classify_component, ((c, i) for i in range(c.n)), parallel
        )
    )
    n_irreducible = all(comp.irreducible for comp in per)
    n_absorbing = None
    if all(len(comp.absorbing) == 1 for comp in per):
        n_absorbing = tuple(
            c.state_labels[i][comp.absorbing[0]] for i, comp in enumerate(per)
        )
    semi = {
        "irreducible": SemiEntry(
            sum(comp.irreducible for comp in per),
            _semi_label(sum(comp.irreducible for comp in per), c.n),
        ),
        "all-essential": SemiEntry(
            sum(all(comp.essential) for comp in per),
            _semi_label(sum(all(comp.essential) for comp in per), c.n),
        ),
        "has-absorbing": SemiEntry(
            sum(bool(comp.absorbing) for comp in per),
            _semi_label(sum(bool(comp.absorbing) for comp in per), c.n),
        ),
    }
    return StateClassification(per, n_irreducible, n_absorbing, semi)


@dataclass(frozen=True)
class StationaryResult:
    distribution: StateNVector
    unique: tuple[bool, ...]
    fixed_space_dimensions: tuple[int, ...]


def _restricted_matrix(chain: MarkovNChain, component: int, members):
    field = chain.field
    return tuple(
        tuple(
            chain.transition_probability(component, i, j) for j in members
        )
        for i in members
    )


def stationary_distribution(c: MarkovNChain) -> StationaryResult:
    """A nonnegative fixed point of the chain, normalized per component.

    Each recurrent (essential) class carries one stationary vector, solved
    on the restricted chain; the representative averages them.  Uniqueness
    per component means a one-dimensional fixed space.
    """
    field = c.field
    classification = classify_states(c)
    components = []
    unique = []
    dims = []
    for index, (grid, comp) in enumerate(
        zip(c.p.components, classification.per_component)
    ):
        n = linalg.shape(grid)[0]
        eye = linalg.identity(field, n)
        if c.convention is Convention.ROW:
            fixed_system = linalg.sub(linalg.transpose(grid), eye)
        else:
            fixed_system = linalg.sub(grid, eye)
        nullity = len(linalg.nullspace(fixed_system))
        dims.append(nullity)
        unique.append(nullity == 1)
        recurrent = [
            members
            for members in comp.classes
            if all(comp.essential[m] for m in members)
        ]
        assert recurrent, "every finite chain has a recurrent class"
        total = [field.zero] * n
        for members in recurrent:
            restricted = _restricted_matrix(c, index, members)
            size = len(members)
            system = linalg.sub(
                linalg.transpose(restricted), linalg.identity(field, size)
            )
            basis = linalg.nullspace(system)
            assert len(basis) == 1, "recurrent class must have a 1-dim fixed space"
            vec = list(basis[0])
            if any(x.v < 0 for x in vec):
                vec = [-x for x in vec]
            norm = sum(vec, field.zero)
            vec = [x / norm for x in vec]
            assert all(_nonnegative(field, x) for x in vec)
            for m, x in zip(members, vec):
                total[m] = total[m] + x
        share = field.one / field.value(len(recurrent))
        total = [x * share for x in total]
        components.append(tuple(total))
    distribution = StateNVector(c, tuple(components))
    return StationaryResult(distribution, tuple(unique), tuple(dims))


def is_independent_trial(c: MarkovNChain) -> bool:
    """True iff every component has identical rows (then P^m = P)."""
    if c.convention is not Convention.ROW:
        raise ConventionMismatch("independent trials are a row-convention notion")
    for grid in c.p.components:
        first = grid[0]
        for row in grid[1:]:
            if not all(x == y for x, y in zip(first, row)):
                return False
    return True


# -- spectral decomposition ---------------------------------------------------

@dataclass(frozen=True)
class ComponentSpectral:
    eigenvalues: tuple[float, ...]  # descending
    matrices: tuple  # one float grid per eigenvalue
    residual: float  # max |sum lambda_i A_i - P|


@dataclass(frozen=True)
class SpectralDecomposition:
    components: tuple[ComponentSpectral, ...]
    tolerance: float


def _exact_spectral(field, grid):
    """Exact eigenpairs when the rational spectrum is fully split and simple."""
    from .polynomials import rational_roots

    poly = linalg.charpoly(grid)
    roots, cofactor = rational_roots(poly)
    if cofactor.degree > 0 or any(mult > 1 for _, mult in roots):
        return None
    n = linalg.shape(grid)[0]
    ordered = sorted((value for value, _ in roots), reverse=True)
    columns = []
    for value in ordered:
        shifted = linalg.sub(
            grid, linalg.scale(value, linalg.identity(field, n))
        )
        basis = linalg.nullspace(shifted)
        assert len(basis) == 1
        columns.append(basis[0])
    right = linalg.from_columns(columns)
    left = linalg.inverse(right)
    eigenvalues = tuple(float(v.v) for v in ordered)
    matrices = []
    for idx in range(n):
        u = [row[idx] for row in right]
        v = left[idx]
        matrices.append(
            tuple(tuple(float((ux * vx).v) for vx in v) for ux in u)
        )
    return eigenvalues, tuple(matrices)


def _float_spectral(grid, tolerance):
    array = np.array([[x.to_float() for x in row] for row in grid], dtype=float)
    scale_factor = max(1.0, float(np.max(np.abs(array))))
    values, vectors = np.linalg.eig(array)
    if np.max(np.abs(values.imag)) > 1e-9 * scale_factor:
        raise ComplexSpectrum(
            "complex eigenvalue pair; the decomposition covers real spectra only"
        )
    values = values.real
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = vectors.real[:, order]
    for i in range(len(values) - 1):
        if abs(values[i] - values[i + 1]) <= max(1e-8, tolerance) * scale_factor:
            raise RepeatedEigenvalues(
                f"eigenvalues {values[i]} and {values[i + 1]} are not simple"
            )
    left = np.linalg.inv(vectors)
    matrices = tuple(
        tuple(tuple(float(x) for x in row)
              for row in np.outer(vectors[:, i], left[i, :]))
        for i in range(len(values))
    )
    return tuple(float(v) for v in values), matrices


def spectral_decompose(c: MarkovNChain) -> SpectralDecomposition:
    """Factor each component as sum lambda_i u_i v_i' with v_i' u_i = 1.

    Requires simple spectra; complex pairs are refused rather than silently
    handled.  Rational chains with fully split simple spectra go through the
    exact path and only the report is floating point.
    """
    tolerance = c.field.tolerance if not c.field.exact else 1e-9
    out = []
    for grid in c.p.components:
        exact = _exact_spectral(c.field, grid) if c.field.exact else None
        if exact is not None:
            eigenvalues, matrices = exact
        else:
            eigenvalues, matrices = _float_spectral(grid, tolerance)
        array = np.array(
            [[x.to_float() for x in row] for row in grid], dtype=float
        )
        reconstructed = np.zeros_like(array)
        for value, matrix in zip(eigenvalues, matrices):
            reconstructed += value * np.array(matrix)
        residual = float(np.max(np.abs(reconstructed - array)))
        out.append(ComponentSpectral(eigenvalues, matrices, residual))
    return SpectralDecomposition(tuple(out), tolerance)


def power_via_spectral(s: SpectralDecomposition, k: int) -> NMatrix:
    """Reconstruct the k-th power from the eigenvalue decomposition."""
    if k < 0:
        raise ValueError("negative power")
    field = FieldDescriptor.real(s.tolerance)
    grids = []
    for comp in s.components:
        size = len(comp.matrices[0])
        total = np.zeros((size, size))
        for value, matrix in zip(comp.eigenvalues, comp.matrices):
            total += value ** k * np.array(matrix)
        grids.append(tuple(tuple(float(x) for x in row) for row in total))
    return NMatrix(field, grids)


# -- random-walk constructors ---------------------------------------------------

class WalkKind(enum.Enum):
    ABSORBING_BARRIERS = "absorbing"
    REFLECTING_BARRIERS = "reflecting"


def random_walk(kind: WalkKind, sizes, step_probabilities) -> MarkovNChain:
    """Nearest-neighbour walk on states 0..K per component.

    Absorbing barriers pin states 0 and K; reflecting barriers bounce with
    the same step probability.  Probabilities are exact fractions, so the
    chain validates exactly over the rationals.
    """
    sizes = tuple(int(k) for k in sizes)
    probabilities = [Fraction(p) for p in step_probabilities]
    if len(sizes) != len(probabilities):
        raise DimMismatch("need one probability per component")
    if any(k < 1 for k in sizes):
        raise ValueError("barrier positions must be at least 1")
    for p in probabilities:
        if not 0 < p < 1:
            raise InvalidProbability(f"step probability {p} outside (0, 1)")
    field = FieldDescriptor.rational()
    grids = []
    labels = []
    for barrier, p in zip(sizes, probabilities):
        q = 1 - p
        size = barrier + 1
        rows = []
        for i in range(size):
            row = [Fraction(0)] * size
            if kind is WalkKind.ABSORBING_BARRIERS and i in (0, barrier):
                row[i] = Fraction(1)
            elif i == 0:
                row[0] = q
                row[1] = p
            elif i == barrier:
                row[barrier - 1] = q
                row[barrier] = p
            else:
                row[i - 1] = q
                row[i + 1] = p
            rows.append(row)
        grids.append(rows)
        labels.append([str(i) for i in range(size)])
    chain = MarkovNChain(
        NMatrix(field, grids), Convention.ROW, labels
    )
    return chain
