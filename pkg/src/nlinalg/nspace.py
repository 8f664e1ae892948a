"""n-vector spaces: dimension signatures, n-vectors, componentwise arithmetic,
independence, bases, spans and same-dimension comparisons.

Components are concrete coordinate spaces F^{n_i} over one shared field.  In
strict mode (the default) the component dimensions must be pairwise distinct;
a lenient mode admits repeats but then the same-dimension space count is
undefined and refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .errors import (
    DimMismatch,
    FieldMismatch,
    NonStrictDims,
    SpaceMismatch,
    TooFewComponents,
)
from .fields import FieldDescriptor, FieldValue


class NDims:
    """An ordered tuple of component dimensions, pairwise distinct if strict."""

    __slots__ = ("dims", "strict")

    def __init__(self, dims, strict: bool = True):
        dims = tuple(int(d) for d in dims)
        if len(dims) < 2:
            raise TooFewComponents("need at least two component dimensions")
        if any(d < 1 for d in dims):
            raise ValueError("component dimensions must be positive")
        if strict and len(set(dims)) != len(dims):
            raise NonStrictDims(f"duplicate dimensions in {dims} (strict mode)")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "strict", strict)

    def __setattr__(self, name, value):
        raise AttributeError("NDims is immutable")

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def __eq__(self, other):
        return isinstance(other, NDims) and self.dims == other.dims

    def __hash__(self):
        return hash(self.dims)

    def __repr__(self):
        return f"NDims{self.dims}"


def same_n_dimension(a: NDims, b: NDims) -> bool:
    """True when one dimension tuple is a permutation of the other."""
    return sorted(a.dims) == sorted(b.dims)


def count_same_dimension(a: NDims) -> int:
    """Number of same-dimension spaces (all dimension permutations), n!.

    Requires strict (pairwise-distinct) dimensions: with repeats the
    permutations would not be distinct tuples.
    """
    if not a.strict or len(set(a.dims)) != len(a.dims):
        raise NonStrictDims("same-dimension count needs pairwise-distinct dims")
    return math.factorial(len(a.dims))


@dataclass(frozen=True)
class NVectorSpace:
    """F^{n_1} u ... u F^{n_n} over one shared field."""

    field: FieldDescriptor
    dims: NDims

    def __post_init__(self):
        if not isinstance(self.dims, NDims):
            object.__setattr__(self, "dims", NDims(self.dims))

    @property
    def n(self) -> int:
        return len(self.dims)

    def zero(self) -> "NVector":
        zero = self.field.zero
        return NVector(
            self, tuple(tuple(zero for _ in range(d)) for d in self.dims)
        )

    def vector(self, components) -> "NVector":
        return NVector(
            self,
            tuple(
                tuple(self.field.value(x) for x in comp) for comp in components
            ),
        )

    def subset(self, sets) -> "NSubset":
        return NSubset(
            self,
            tuple(
                tuple(tuple(self.field.value(x) for x in vec) for vec in group)
                for group in sets
            ),
        )


class NVector:
    """One vector per component, entries in the space's field."""

    __slots__ = ("space", "components")

    def __init__(self, space: NVectorSpace, components):
        components = tuple(
            tuple(space.field.value(x) for x in comp) for comp in components
        )
        if len(components) != space.n:
            raise DimMismatch(
                f"expected {space.n} components, got {len(components)}"
            )
        for comp, d in zip(components, space.dims):
            if len(comp) != d:
                raise DimMismatch(
                    f"component of length {len(comp)} does not match dim {d}"
                )
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("NVector is immutable")

    def _check(self, other: "NVector"):
        if not isinstance(other, NVector):
            raise SpaceMismatch(f"expected NVector, got {other!r}")
        if self.space != other.space:
            raise SpaceMismatch("vectors live in different spaces")

    def __add__(self, other):
        self._check(other)
        return NVector(
            self.space,
            tuple(
                tuple(x + y for x, y in zip(a, b))
                for a, b in zip(self.components, other.components)
            ),
        )

    def __sub__(self, other):
        self._check(other)
        return NVector(
            self.space,
            tuple(
                tuple(x - y for x, y in zip(a, b))
                for a, b in zip(self.components, other.components)
            ),
        )

    def __neg__(self):
        return NVector(
            self.space,
            tuple(tuple(-x for x in comp) for comp in self.components),
        )

    def scale(self, c) -> "NVector":
        c = self.space.field.value(c)
        return NVector(
            self.space,
            tuple(tuple(c * x for x in comp) for comp in self.components),
        )

    def __rmul__(self, c):
        return self.scale(c)

    def axpy(self, c, other: "NVector") -> "NVector":
        """c * self + other, componentwise."""
        self._check(other)
        return self.scale(c) + other

    def __eq__(self, other):
        if not isinstance(other, NVector):
            return NotImplemented
        if self.space != other.space:
            return False
        return all(
            x == y
            for a, b in zip(self.components, other.components)
            for x, y in zip(a, b)
        )

    def __hash__(self):
        return hash(tuple(tuple(x.v for x in comp) for comp in self.components))

    def is_zero(self) -> bool:
        return all(x.is_zero() for comp in self.components for x in comp)

    def __repr__(self):
        inner = " u ".join(
            "(" + ", ".join(str(x) for x in comp) + ")"
            for comp in self.components
        )
        return f"NVector[{inner}]"


class NSubset:
    """One nonempty finite list of vectors per component."""

    __slots__ = ("space", "sets")

    def __init__(self, space: NVectorSpace, sets):
        sets = tuple(
            tuple(tuple(space.field.value(x) for x in vec) for vec in group)
            for group in sets
        )
        if len(sets) != space.n:
            raise DimMismatch(f"expected {space.n} component sets")
        for group, d in zip(sets, space.dims):
            if not group:
                raise ValueError("component sets must be nonempty")
            for vec in group:
                if len(vec) != d:
                    raise DimMismatch(
                        f"vector of length {len(vec)} in a dim-{d} component"
                    )
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "sets", sets)

    def __setattr__(self, name, value):
        raise AttributeError("NSubset is immutable")

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self.sets)


@dataclass(frozen=True)
class IndependenceReport:
    independent: bool
    per_component: tuple[bool, ...]
    first_dependent: int | None


def is_n_independent(s: NSubset) -> IndependenceReport:
    """Independent iff every component set is linearly independent."""
    verdicts = []
    for group in s.sets:
        grid = tuple(group)
        verdicts.append(linalg.rank(grid) == len(group))
    first = next((i for i, ok in enumerate(verdicts) if not ok), None)
    return IndependenceReport(first is None, tuple(verdicts), first)


def is_n_basis(s: NSubset) -> bool:
    """Each component set spans its component: right size and independent."""
    if s.sizes() != tuple(s.space.dims):
        return False
    return is_n_independent(s).independent


@dataclass(frozen=True)
class SpanReport:
    member: bool
    coordinates: tuple[tuple[FieldValue, ...], ...] | None
    per_component: tuple[bool, ...]


def span_membership(s: NSubset, v: NVector) -> SpanReport:
    """Solve the componentwise systems expressing v over the set vectors.

    Membership holds when every component is solvable; the canonical
    coordinates set free variables to zero.
    """
    if s.space != v.space:
        raise SpaceMismatch("subset and vector live in different spaces")
    coords = []
    verdicts = []
    for group, target in zip(s.sets, v.components):
        matrix = linalg.from_columns(group)
        solution = linalg.solve(matrix, target)
        verdicts.append(solution is not None)
        coords.append(solution)
    member = all(verdicts)
    return SpanReport(
        member,
        tuple(coords) if member else None,
        tuple(verdicts),
    )
