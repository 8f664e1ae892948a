"""n-matrices: ordered tuples of component matrices over one shared field.

Components may be rectangular and of mixed shapes; arithmetic, determinants,
rank, null spaces and inverses all act componentwise.  The orthogonality
taxonomy classifies A At per component as identity, negated identity or
neither, then aggregates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .errors import (
    FieldMismatch,
    NonSquare,
    ShapeMismatch,
    SingularComponent,
    TooFewComponents,
)
from .fields import FieldDescriptor, FieldValue


class NMatrix:
    __slots__ = ("field", "components")

    def __init__(self, field: FieldDescriptor, components):
        components = tuple(
            linalg.as_grid(field, comp) for comp in components
        )
        if len(components) < 2:
            raise TooFewComponents("an n-matrix needs at least two components")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("NMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.components)

    def shapes(self) -> tuple[tuple[int, int], ...]:
        return tuple(linalg.shape(c) for c in self.components)

    @property
    def is_square(self) -> bool:
        return all(r == c for r, c in self.shapes())

    def is_mixed_square(self, strict: bool = True) -> bool:
        """Square components; with strict=True additionally all sizes distinct."""
        if not self.is_square:
            return False
        sizes = [r for r, _ in self.shapes()]
        return len(set(sizes)) == len(sizes) if strict else True

    def require_square(self):
        if not self.is_square:
            raise NonSquare(f"components have shapes {self.shapes()}")

    def _check(self, other: "NMatrix"):
        if not isinstance(other, NMatrix):
            raise ShapeMismatch(f"expected NMatrix, got {other!r}")
        if not self.field.same_field(other.field):
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.n != other.n:
            raise ShapeMismatch(
                f"component counts differ: {self.n} vs {other.n}"
            )

    @classmethod
    def identity(cls, field: FieldDescriptor, sizes) -> "NMatrix":
        return cls(field, [linalg.identity(field, s) for s in sizes])

    def __add__(self, other):
        self._check(other)
        if self.shapes() != other.shapes():
            raise ShapeMismatch(f"{self.shapes()} vs {other.shapes()}")
        return NMatrix(
            self.field,
            [linalg.add(a, b) for a, b in zip(self.components, other.components)],
        )

    def __sub__(self, other):
        self._check(other)
        if self.shapes() != other.shapes():
            raise ShapeMismatch(f"{self.shapes()} vs {other.shapes()}")
        return NMatrix(
            self.field,
            [linalg.sub(a, b) for a, b in zip(self.components, other.components)],
        )

    def __neg__(self):
        return NMatrix(self.field, [linalg.neg(c) for c in self.components])

    def __matmul__(self, other):
        self._check(other)
        for (ra, ca), (rb, cb) in zip(self.shapes(), other.shapes()):
            if ca != rb:
                raise ShapeMismatch(
                    f"cannot multiply {ra}x{ca} by {rb}x{cb}"
                )
        return NMatrix(
            self.field,
            [
                linalg.matmul(a, b)
                for a, b in zip(self.components, other.components)
            ],
        )

    def scale(self, c) -> "NMatrix":
        c = self.field.value(c)
        return NMatrix(
            self.field, [linalg.scale(c, comp) for comp in self.components]
        )

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self) -> "NMatrix":
        return NMatrix(
            self.field, [linalg.transpose(c) for c in self.components]
        )

    def pow(self, k: int) -> "NMatrix":
        if k < 0:
            raise ValueError("negative n-matrix power")
        self.require_square()
        return NMatrix(
            self.field, [linalg.mat_pow(c, k) for c in self.components]
        )

    def __eq__(self, other):
        if not isinstance(other, NMatrix):
            return NotImplemented
        if not self.field.same_field(other.field) or self.n != other.n:
            return False
        if self.shapes() != other.shapes():
            return False
        return all(
            linalg.grids_equal(a, b)
            for a, b in zip(self.components, other.components)
        )

    def __hash__(self):
        return hash(
            tuple(
                tuple(tuple(x.v for x in row) for row in comp)
                for comp in self.components
            )
        )

    def is_zero(self) -> bool:
        return all(linalg.is_zero_grid(c) for c in self.components)

    def __repr__(self):
        return f"NMatrix(n={self.n}, shapes={self.shapes()})"


def n_det(a: NMatrix) -> tuple[FieldValue, ...]:
    a.require_square()
    return tuple(linalg.det(c) for c in a.components)


def n_rank(a: NMatrix) -> tuple[int, ...]:
    return tuple(linalg.rank(c) for c in a.components)


def n_nullspace(a: NMatrix) -> tuple[list[tuple[FieldValue, ...]], ...]:
    return tuple(linalg.nullspace(c) for c in a.components)


def n_inverse(a: NMatrix) -> NMatrix:
    a.require_square()
    inverses = []
    for i, comp in enumerate(a.components):
        try:
            inverses.append(linalg.inverse(comp))
        except linalg.SingularGrid:
            raise SingularComponent(i) from None
    return NMatrix(a.field, inverses)


class ComponentOrtho(enum.Enum):
    IDENTITY = "Identity"
    NEG_IDENTITY = "NegIdentity"
    OTHER = "Other"


class OrthoVerdict(enum.Enum):
    N_ORTHOGONAL = "NOrthogonal"
    N_ANTI_ORTHOGONAL = "NAntiOrthogonal"
    N_SEMI_ORTHOGONAL = "NSemiOrthogonal"
    N_SEMI_ANTI_ORTHOGONAL = "NSemiAntiOrthogonal"
    NONE = "None"


@dataclass(frozen=True)
class OrthoClass:
    verdict: OrthoVerdict
    per_component: tuple[ComponentOrtho, ...]


def ortho_classify(a: NMatrix) -> OrthoClass:
    """Classify A At per component; rectangular components give m_i x m_i products."""
    per = []
    for comp in a.components:
        product = linalg.matmul(comp, linalg.transpose(comp))
        size = linalg.shape(product)[0]
        eye = linalg.identity(a.field, size)
        if linalg.grids_equal(product, eye):
            per.append(ComponentOrtho.IDENTITY)
        elif linalg.grids_equal(product, linalg.neg(eye)):
            per.append(ComponentOrtho.NEG_IDENTITY)
        else:
            per.append(ComponentOrtho.OTHER)
    identity_count = sum(1 for p in per if p is ComponentOrtho.IDENTITY)
    neg_count = sum(1 for p in per if p is ComponentOrtho.NEG_IDENTITY)
    if identity_count == len(per):
        verdict = OrthoVerdict.N_ORTHOGONAL
    elif neg_count == len(per):
        verdict = OrthoVerdict.N_ANTI_ORTHOGONAL
    elif identity_count > 0:
        verdict = OrthoVerdict.N_SEMI_ORTHOGONAL
    elif neg_count > 0:
        verdict = OrthoVerdict.N_SEMI_ANTI_ORTHOGONAL
    else:
        verdict = OrthoVerdict.NONE
    return OrthoClass(verdict, tuple(per))
