"""Componentwise standard inner products over the ordered fields (Q and R).

Dot products, orthogonalization, best approximation, orthogonal complements
and projections, the Bessel inequality, and adjoint / normal / unitary
classification of square operators.  Prime fields are rejected: the
positivity axiom has no meaning there.

Over the rationals, orthogonalization emits an orthogonal (not orthonormal)
basis together with the squared norms, since normalization would leave the
field; over the reals it additionally emits unit vectors.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import linalg
from .errors import (
    DependentInput,
    DomainError,
    SpaceMismatch,
    UnorderedField,
    ZeroVectorInSet,
)
from .fields import REAL, FieldDescriptor, FieldValue
from .nmatrix import NMatrix
from .nspace import NSubset, NVector, is_n_independent


def _require_ordered(field: FieldDescriptor, what: str):
    if not field.ordered:
        raise UnorderedField(f"{what} needs an ordered field, not {field}")


def _dot(u, v) -> FieldValue:
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def n_inner(a: NVector, b: NVector) -> tuple[FieldValue, ...]:
    if a.space != b.space:
        raise SpaceMismatch("vectors live in different spaces")
    _require_ordered(a.space.field, "inner product")
    return tuple(
        _dot(u, v) for u, v in zip(a.components, b.components)
    )


def n_norm_sq(a: NVector) -> tuple[FieldValue, ...]:
    return n_inner(a, a)


@dataclass(frozen=True)
class GramSchmidtResult:
    orthogonal: NSubset
    norms_sq: tuple[tuple[FieldValue, ...], ...]
    orthonormal: NSubset | None  # real field only


def gram_schmidt(s: NSubset) -> GramSchmidtResult:
    """Orthogonalize each component list in order, spans preserved."""
    field = s.space.field
    _require_ordered(field, "orthogonalization")
    if not is_n_independent(s).independent:
        raise DependentInput("the input set is n-dependent")
    orthogonal = []
    norms = []
    for group in s.sets:
        basis: list[tuple] = []
        squares: list[FieldValue] = []
        for vec in group:
            current = list(vec)
            for prev, sq in zip(basis, squares):
                coefficient = _dot(vec, prev) / sq
                current = [x - coefficient * y for x, y in zip(current, prev)]
            current = tuple(current)
            basis.append(current)
            squares.append(_dot(current, current))
        orthogonal.append(tuple(basis))
        norms.append(tuple(squares))
    result = NSubset(s.space, tuple(orthogonal))
    orthonormal = None
    if field.kind == REAL:
        unit = []
        for group, squares in zip(orthogonal, norms):
            unit.append(
                tuple(
                    tuple(x / field.value(math.sqrt(sq.v)) for x in vec)
                    for vec, sq in zip(group, squares)
                )
            )
        orthonormal = NSubset(s.space, tuple(unit))
    return GramSchmidtResult(result, tuple(norms), orthonormal)


def _is_pairwise_orthogonal(s: NSubset) -> bool:
    for group in s.sets:
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if not _dot(group[i], group[j]).is_zero():
                    return False
    return True


def best_approximation(w_basis: NSubset, beta: NVector) -> NVector:
    """The unique closest vector to beta inside the componentwise spans.

    A non-orthogonal basis is orthogonalized first; the residual is
    orthogonal to every basis vector per component.
    """
    if w_basis.space != beta.space:
        raise SpaceMismatch("basis and vector live in different spaces")
    _require_ordered(beta.space.field, "best approximation")
    if _is_pairwise_orthogonal(w_basis):
        if not is_n_independent(w_basis).independent:
            raise DependentInput("the subspace basis is n-dependent")
        orthogonal = w_basis
    else:
        orthogonal = gram_schmidt(w_basis).orthogonal
    field = beta.space.field
    approx = []
    for group, target in zip(orthogonal.sets, beta.components):
        acc = [field.zero] * len(target)
        for vec in group:
            coefficient = _dot(target, vec) / _dot(vec, vec)
            acc = [x + coefficient * y for x, y in zip(acc, vec)]
        approx.append(tuple(acc))
    return NVector(beta.space, tuple(approx))


def orthogonal_complement(s: NSubset) -> NSubset:
    """Componentwise orthogonal complement of the spans.

    The complement basis is the null space of the stacked-vector system.  A
    full-span component has the zero space as complement; it is reported as
    the singleton {0} since component lists are nonempty by construction.
    """
    _require_ordered(s.space.field, "orthogonal complement")
    field = s.space.field
    out = []
    for group, dim in zip(s.sets, s.space.dims):
        basis = linalg.nullspace(tuple(group))
        if not basis:
            basis = [tuple(field.zero for _ in range(dim))]
        out.append(tuple(basis))
    return NSubset(s.space, tuple(out))


def orthogonal_projection(w_basis: NSubset, v: NVector) -> tuple[NVector, NVector]:
    """(Ev, v - Ev): the projection onto the spans and the residual."""
    ev = best_approximation(w_basis, v)
    return ev, v - ev


@dataclass(frozen=True)
class BesselReport:
    holds: bool
    slack: tuple[FieldValue, ...]  # norm_sq(beta) - sum of Fourier squares


def bessel_check(orthogonal_set: NSubset, beta: NVector) -> BesselReport:
    """Sum of squared Fourier coefficients against the squared norm.

    The slack equals the squared norm of the residual after projecting onto
    the set, so it is nonnegative, and zero exactly when beta lies in the
    span.
    """
    if orthogonal_set.space != beta.space:
        raise SpaceMismatch("set and vector live in different spaces")
    _require_ordered(beta.space.field, "Bessel inequality")
    for group in orthogonal_set.sets:
        for vec in group:
            if all(x.is_zero() for x in vec):
                raise ZeroVectorInSet("the orthogonal set contains zero")
    if not _is_pairwise_orthogonal(orthogonal_set):
        raise DomainError("the set is not pairwise orthogonal")
    slack = []
    for group, target in zip(orthogonal_set.sets, beta.components):
        field = beta.space.field
        total = field.zero
        for vec in group:
            coefficient = _dot(target, vec)
            total = total + coefficient * coefficient / _dot(vec, vec)
        slack.append(_dot(target, target) - total)
    holds = all(s >= beta.space.field.zero or s.is_zero() for s in slack)
    return BesselReport(holds, tuple(slack))


def adjoint(a: NMatrix) -> NMatrix:
    """The adjoint under the standard inner product: the transpose."""
    a.require_square()
    _require_ordered(a.field, "adjoint")
    return a.transpose()


class OperatorClass(enum.Enum):
    SELF_ADJOINT = "SelfAdjoint"
    UNITARY = "Unitary"
    NORMAL = "Normal"
    NONE = "None"


@dataclass(frozen=True)
class OperatorClassification:
    per_component: tuple[OperatorClass, ...]
    aggregate: OperatorClass


def operator_classify(a: NMatrix) -> OperatorClassification:
    """Classify each square component against its transpose.

    Per component the most specific label wins (self-adjoint before unitary
    before normal); the aggregate is the strongest class every component
    shares.
    """
    a.require_square()
    _require_ordered(a.field, "operator classification")
    properties = []
    for grid in a.components:
        gt = linalg.transpose(grid)
        aat = linalg.matmul(grid, gt)
        ata = linalg.matmul(gt, grid)
        eye = linalg.identity(a.field, linalg.shape(grid)[0])
        flags = set()
        if linalg.grids_equal(grid, gt):
            flags.add("self-adjoint")
        if linalg.grids_equal(aat, eye) and linalg.grids_equal(ata, eye):
            flags.add("unitary")
        if linalg.grids_equal(aat, ata):
            flags.add("normal")
        properties.append(flags)

    def verdict(flags) -> OperatorClass:
        if "self-adjoint" in flags:
            return OperatorClass.SELF_ADJOINT
        if "unitary" in flags:
            return OperatorClass.UNITARY
        if "normal" in flags:
            return OperatorClass.NORMAL
        return OperatorClass.NONE

    shared = set.intersection(*properties) if properties else set()
    return OperatorClassification(
        tuple(verdict(f) for f in properties), verdict(shared)
    )
