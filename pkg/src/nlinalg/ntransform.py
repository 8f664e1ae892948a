"""Componentwise linear maps between n-vector spaces.

A map carries a component assignment i -> j(i) from source components into
target components plus one matrix per source component, of shape
(target dim x source dim).  The kind is always derived from the assignment:

  * injective assignment, more targets than sources .... NLinear
  * injective, equal counts ........................... OneToOne
  * injective, equal counts, dimension-matching ........ Special
  * repeated targets, more targets than sources ........ SpecialShrinking
  * repeated targets otherwise ......................... Shrinking

Applying a map writes zeros into target components the assignment never
hits; when several source components share a target slot (shrinking maps),
their contributions are summed, the unique linear choice consistent with
slotwise addition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .errors import (
    InvalidAssignment,
    KindMismatch,
    NotABasis,
    ShapeMismatch,
    SingularComponent,
    SpaceMismatch,
)
from .nspace import NDims, NSubset, NVector, NVectorSpace, is_n_basis


class MapKind(enum.Enum):
    N_LINEAR = "NLinear"
    SHRINKING = "Shrinking"
    SPECIAL_SHRINKING = "SpecialShrinking"
    ONE_TO_ONE = "OneToOne"
    SPECIAL = "Special"


INJECTIVE_KINDS = frozenset(
    {MapKind.N_LINEAR, MapKind.ONE_TO_ONE, MapKind.SPECIAL}
)


class ComponentAssignment:
    """Target slot per source component, 1-based."""

    __slots__ = ("source_count", "target_count", "map")

    def __init__(self, source_count: int, target_count: int, targets):
        targets = tuple(int(j) for j in targets)
        if len(targets) != source_count:
            raise InvalidAssignment(
                f"expected {source_count} targets, got {len(targets)}"
            )
        for j in targets:
            if not 1 <= j <= target_count:
                raise InvalidAssignment(
                    f"target slot {j} outside 1..{target_count}"
                )
        object.__setattr__(self, "source_count", source_count)
        object.__setattr__(self, "target_count", target_count)
        object.__setattr__(self, "map", targets)

    def __setattr__(self, name, value):
        raise AttributeError("ComponentAssignment is immutable")

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def __eq__(self, other):
        return (
            isinstance(other, ComponentAssignment)
            and self.source_count == other.source_count
            and self.target_count == other.target_count
            and self.map == other.map
        )

    def __hash__(self):
        return hash((self.source_count, self.target_count, self.map))

    def __repr__(self):
        return f"ComponentAssignment({self.map} into {self.target_count})"

    def kind(self, source_dims: NDims, target_dims: NDims) -> MapKind:
        n, m = self.source_count, self.target_count
        if self.injective:
            if m == n:
                matching = all(
                    source_dims[i] == target_dims[j - 1]
                    for i, j in enumerate(self.map)
                )
                return MapKind.SPECIAL if matching else MapKind.ONE_TO_ONE
            return MapKind.N_LINEAR
        return MapKind.SPECIAL_SHRINKING if m > n else MapKind.SHRINKING


class NLinearMap:
    __slots__ = ("source", "target", "assignment", "matrices", "kind")

    def __init__(self, source: NVectorSpace, target: NVectorSpace,
                 assignment: ComponentAssignment, matrices):
        source.field.require_same(target.field)
        if assignment.source_count != source.n:
            raise InvalidAssignment(
                f"assignment covers {assignment.source_count} components, "
                f"source has {source.n}"
            )
        if assignment.target_count != target.n:
            raise InvalidAssignment(
                f"assignment points into {assignment.target_count} slots, "
                f"target has {target.n}"
            )
        grids = tuple(linalg.as_grid(source.field, m) for m in matrices)
        if len(grids) != source.n:
            raise ShapeMismatch(f"expected {source.n} component matrices")
        for i, grid in enumerate(grids):
            expected = (target.dims[assignment.map[i] - 1], source.dims[i])
            if linalg.shape(grid) != expected:
                raise ShapeMismatch(
                    f"component {i + 1} matrix is {linalg.shape(grid)}, "
                    f"expected {expected}"
                )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "assignment", assignment)
        object.__setattr__(self, "matrices", grids)
        object.__setattr__(
            self, "kind", assignment.kind(source.dims, target.dims)
        )

    def __setattr__(self, name, value):
        raise AttributeError("NLinearMap is immutable")

    @classmethod
    def identity(cls, space: NVectorSpace) -> "NLinearMap":
        assignment = ComponentAssignment(
            space.n, space.n, range(1, space.n + 1)
        )
        matrices = [linalg.identity(space.field, d) for d in space.dims]
        return cls(space, space, assignment, matrices)

    @classmethod
    def zero(cls, source: NVectorSpace, target: NVectorSpace,
             assignment: ComponentAssignment) -> "NLinearMap":
        matrices = [
            linalg.zeros(source.field, target.dims[j - 1], source.dims[i])
            for i, j in enumerate(assignment.map)
        ]
        return cls(source, target, assignment, matrices)

    def __eq__(self, other):
        if not isinstance(other, NLinearMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
            and all(
                linalg.grids_equal(a, b)
                for a, b in zip(self.matrices, other.matrices)
            )
        )

    def __add__(self, other):
        if not isinstance(other, NLinearMap):
            raise SpaceMismatch(f"expected NLinearMap, got {other!r}")
        if (self.source != other.source or self.target != other.target
                or self.assignment != other.assignment):
            raise SpaceMismatch("maps must share spaces and assignment")
        return NLinearMap(
            self.source, self.target, self.assignment,
            [linalg.add(a, b) for a, b in zip(self.matrices, other.matrices)],
        )

    def scale(self, c) -> "NLinearMap":
        c = self.source.field.value(c)
        return NLinearMap(
            self.source, self.target, self.assignment,
            [linalg.scale(c, m) for m in self.matrices],
        )

    def __repr__(self):
        return (
            f"NLinearMap({self.kind.value}, assignment={self.assignment.map})"
        )


def apply(t: NLinearMap, v: NVector) -> NVector:
    if v.space != t.source:
        raise SpaceMismatch("vector is not in the map's source space")
    field = t.source.field
    out = [
        [field.zero] * d for d in t.target.dims
    ]
    for i, j in enumerate(t.assignment.map):
        image = linalg.mat_vec(t.matrices[i], v.components[i])
        slot = out[j - 1]
        for k, x in enumerate(image):
            slot[k] = slot[k] + x
    return NVector(t.target, tuple(tuple(row) for row in out))


@dataclass(frozen=True)
class KernelReport:
    bases: tuple[list, ...]
    nonzero_components: int  # the t in "t-subspace"


def n_kernel(t: NLinearMap) -> KernelReport:
    bases = tuple(linalg.nullspace(m) for m in t.matrices)
    return KernelReport(bases, sum(1 for b in bases if b))


@dataclass(frozen=True)
class RankNullityReport:
    ranks: tuple[int, ...]
    nullities: tuple[int, ...]
    dims: tuple[int, ...]


def rank_nullity(t: NLinearMap) -> RankNullityReport:
    """Per-component ranks and nullities with the rank + nullity = dim law.

    The law is asserted only for injective-assignment kinds; shrinking maps
    report KindMismatch since the law is not claimed there.
    """
    if t.kind not in INJECTIVE_KINDS:
        raise KindMismatch(
            f"rank-nullity law applies to injective assignments, not "
            f"{t.kind.value}"
        )
    ranks = tuple(linalg.rank(m) for m in t.matrices)
    nullities = tuple(len(b) for b in n_kernel(t).bases)
    dims = tuple(t.source.dims)
    for r, k, d in zip(ranks, nullities, dims):
        assert r + k == d, "rank-nullity law violated (internal error)"
    return RankNullityReport(ranks, nullities, dims)


def from_basis_images(source_basis: NSubset, target: NVectorSpace,
                      assignment: ComponentAssignment,
                      images) -> NLinearMap:
    """The unique map sending each basis vector to its stated image.

    images[i] lists, for source component i, one target-component vector per
    basis vector, living in target slot assignment.map[i].
    """
    space = source_basis.space
    if not is_n_basis(source_basis):
        raise NotABasis("the source set is not an n-basis")
    field = space.field
    matrices = []
    for i, (group, j) in enumerate(zip(source_basis.sets, assignment.map)):
        image_list = [
            tuple(field.value(x) for x in vec) for vec in images[i]
        ]
        if len(image_list) != len(group):
            raise ShapeMismatch(
                f"component {i + 1}: {len(group)} basis vectors but "
                f"{len(image_list)} images"
            )
        target_dim = target.dims[j - 1]
        for vec in image_list:
            if len(vec) != target_dim:
                raise ShapeMismatch(
                    f"component {i + 1}: image of length {len(vec)} in a "
                    f"dim-{target_dim} slot"
                )
        basis_matrix = linalg.from_columns(group)
        image_matrix = (
            linalg.from_columns(image_list)
            if image_list
            else linalg.zeros(field, target_dim, 0)
        )
        matrices.append(
            linalg.matmul(image_matrix, linalg.inverse(basis_matrix))
        )
    return NLinearMap(space, target, assignment, matrices)


def compose(u: NLinearMap, t: NLinearMap) -> NLinearMap:
    """u after t: (u . t)(v) = u(t(v))."""
    if t.target != u.source:
        raise SpaceMismatch("inner map's target is not the outer map's source")
    targets = tuple(u.assignment.map[j - 1] for j in t.assignment.map)
    assignment = ComponentAssignment(t.source.n, u.target.n, targets)
    matrices = [
        linalg.matmul(u.matrices[j - 1], t.matrices[i])
        for i, j in enumerate(t.assignment.map)
    ]
    return NLinearMap(t.source, u.target, assignment, matrices)


def invert(t: NLinearMap) -> NLinearMap:
    if t.kind is not MapKind.SPECIAL:
        raise KindMismatch(
            f"only Special maps invert, this one is {t.kind.value}"
        )
    inverse_targets = [0] * t.source.n
    for i, j in enumerate(t.assignment.map):
        inverse_targets[j - 1] = i + 1
    matrices = [None] * t.source.n
    for i, j in enumerate(t.assignment.map):
        try:
            matrices[j - 1] = linalg.inverse(t.matrices[i])
        except linalg.SingularGrid:
            raise SingularComponent(i) from None
    assignment = ComponentAssignment(t.target.n, t.source.n, inverse_targets)
    return NLinearMap(t.target, t.source, assignment, matrices)


def hom_dimension(source_dims: NDims, target_dims: NDims,
                  assignment: ComponentAssignment) -> tuple[int, ...]:
    """Dimension tuple of the space of maps with this injective assignment."""
    if not assignment.injective:
        raise InvalidAssignment("hom dimension needs an injective assignment")
    if assignment.source_count != len(source_dims):
        raise InvalidAssignment("assignment does not cover the source dims")
    if assignment.target_count != len(target_dims):
        raise InvalidAssignment("assignment does not match the target dims")
    return tuple(
        target_dims[j - 1] * source_dims[i]
        for i, j in enumerate(assignment.map)
    )
