"""Validity and classification checks for component tuples of groups and fields.

An n-group over component groups of finite orders has order equal to the
product of the component orders.  An n-field is a tuple of at least two
pairwise-distinct fields with no containment between members; it is
classified by the characteristics of its components.
"""

from __future__ import annotations

import enum
import math

from .errors import ContainmentViolation, DuplicateComponent, TooFewComponents
from .fields import RATIONAL, REAL, FieldDescriptor


def ngroup_order(component_orders) -> int:
    """Product of the component group orders, at arbitrary precision."""
    orders = list(component_orders)
    if len(orders) < 2:
        raise TooFewComponents("an n-group needs at least two components")
    for o in orders:
        if not isinstance(o, int) or o < 1:
            raise ValueError(f"group order must be a positive integer, got {o!r}")
    return math.prod(orders)


class NFieldClass(enum.Enum):
    CHAR_ZERO = "CharZero"
    FINITE_CHAR = "FiniteChar"
    MIXED_CHAR = "MixedChar"


def _validate_components(components: tuple[FieldDescriptor, ...]):
    if len(components) < 2:
        raise TooFewComponents("an n-field needs at least two components")
    for i, a in enumerate(components):
        for b in components[i + 1:]:
            if a.same_field(b):
                raise DuplicateComponent(f"duplicate component field {a}")
    kinds = {c.kind for c in components}
    # The rationals embed in the reals; that is the one containment pair the
    # field kinds here can express.
    if RATIONAL in kinds and REAL in kinds:
        raise ContainmentViolation("Q is contained in R")


class NFieldSpec:
    """A validated tuple of pairwise-distinct, containment-free fields."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        _validate_components(components)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("NFieldSpec is immutable")

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        inner = " ".join(repr(c) for c in self.components)
        return f"NFieldSpec({inner})"


def nfield_classify(spec) -> NFieldClass:
    """Classify a field tuple by component characteristics.

    Accepts an NFieldSpec or a raw descriptor sequence; raw sequences are
    validated first (too few components, duplicates, containment).
    """
    if isinstance(spec, NFieldSpec):
        components = spec.components
    else:
        components = tuple(spec)
        _validate_components(components)
    characteristics = [c.characteristic for c in components]
    if all(ch == 0 for ch in characteristics):
        return NFieldClass.CHAR_ZERO
    if all(ch > 0 for ch in characteristics):
        return NFieldClass.FINITE_CHAR
    return NFieldClass.MIXED_CHAR
